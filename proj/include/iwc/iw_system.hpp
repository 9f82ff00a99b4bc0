#pragma once

#include <map>
#include <string>
#include <vector>

#include "iwc/algebra.hpp"
#include "iwc/poly.hpp"
#include "iwc/signature.hpp"

namespace iwc {

enum class InverseMode { Cofactor, Explicit };
const char* inverse_mode_name(InverseMode m);

/// "a23" is the entry in row 2, column 3 of A (1-based); likewise "b23".
std::string a_var(std::size_t row, std::size_t col);
std::string b_var(std::size_t row, std::size_t col);

/// Polynomial conditions on A (P = I) for the limit of A W_eps to be the
/// target tensor: for i < j and every k with s = alpha_i + alpha_j - alpha_k,
/// L_ijk = 0 when s < 0 and L_ijk = target c_ij^k when s = 0. Cofactor mode
/// writes B = adj(A) and adds det A - 1; explicit mode keeps b variables
/// and adds A B - I. Gaussian constants bring in a variable I with I^2 + 1.
Ideal generate_iw_system(const StructureTensor& source, const StructureTensor& target, const Signature& sig,
                         InverseMode mode = InverseMode::Cofactor);

/// Only the limit equations (explicit b variables, no closure).
std::vector<Poly> limit_equations(const StructureTensor& source, const StructureTensor& target,
                                  const Signature& sig, const Ideal& ring);

/// Hand-reduced systems shipped as fixtures.
std::vector<std::string> fixture_ids();
/// Throws UnknownName for an unknown id.
Ideal load_fixture(const std::string& id);

/// Rewrites p over another variable list by name (UnknownName when a used
/// variable is missing there).
Poly transfer(const Poly& p, const VarList& from, const Ideal& to);

/// True when p is a rational linear combination of the polys.
bool in_linear_span(const Poly& p, const std::vector<Poly>& polys);

/// Generators of the fixture that are not rational combinations of the
/// generated system's generators. Generators using a variable absent from
/// the generated system (the det slack t) are skipped and listed in
/// `skipped` when given.
std::vector<std::size_t> fixture_outside_span(const Ideal& fixture, const Ideal& generated,
                                              std::vector<std::size_t>* skipped = nullptr);

/// Assignment vector for evaluating a system at matrix A: a and b entries
/// (b = A^-1), t = 1/det A, I = i; other variables from `extra`.
std::vector<Scalar> assignment_for(const Ideal& ideal, const Matrix& a,
                                   const std::map<std::string, Scalar>& extra = {});

/// Reads the a-entries of an assignment back into a matrix.
Matrix matrix_from_assignment(const Ideal& ideal, const std::vector<Scalar>& point, std::size_t n);

}  // namespace iwc
