#pragma once

#include <string>
#include <variant>
#include <vector>

#include "iwc/groebner.hpp"
#include "iwc/json_io.hpp"
#include "iwc/poly.hpp"

namespace iwc {

enum class CertifyMode { Complex, RealBranch };
const char* certify_mode_name(CertifyMode m);

/// A point (one scalar per ideal variable) where every generator vanishes.
struct FeasibleWitness {
  std::vector<Scalar> point;
};

/// Replaying `trace` from the generators produces a nonzero constant, so
/// the system has no solution over C. `basis` is the reduced basis {1}.
struct ComplexInfeasible {
  std::vector<TraceStep> trace;
  std::vector<Poly> basis;
};

/// target lies in the ideal: replay `trace`, then the normal form of
/// target by the listed derived elements is zero.
struct Membership {
  Poly target;
  std::vector<TraceStep> trace;
  std::vector<std::size_t> reducers;
};

/// Real infeasibility of the so(3) column system. With v the third column
/// (rows 1..3) and |v|^2 = a13^2 + a23^2 + a33^2:
///   product: x1 |v|^2 is in I;
///   x1_branch: I + <x1, s |v|^2 - 1> has no complex point, so x1 = 0 forces
///     |v|^2 = 0, which over R means v = 0;
///   column_branch: I + <v> has no complex point.
struct RealBranch {
  Membership product;
  ComplexInfeasible x1_branch;
  ComplexInfeasible column_branch;
};

/// Each target is a positive combination of squares of variables and lies
/// in I, so over R all those variables vanish; I plus the variables has no
/// complex point.
struct RealSquares {
  std::vector<Membership> squares;
  ComplexInfeasible vanish;
};

struct Inconclusive {
  std::string reason;
  std::size_t pair_reductions = 0;
};

using Certificate = std::variant<FeasibleWitness, ComplexInfeasible, RealBranch, RealSquares, Inconclusive>;

const char* certificate_kind(const Certificate& c);
bool is_conclusive(const Certificate& c);

/// Complex mode: ComplexInfeasible when 1 is in the ideal, otherwise
/// Inconclusive (budget exhausted, or a complete basis without unit, which
/// shows complex points exist but carries no witness). A witness hint that
/// satisfies every generator is returned as FeasibleWitness first.
/// RealBranch mode needs x1, a13, a23, a33 (StructureMismatch otherwise).
Certificate certify(const Ideal& ideal, CertifyMode mode, const GroebnerOptions& opts = {},
                    const std::vector<Scalar>* witness_hint = nullptr);

/// ComplexInfeasible when 1 is in the ideal; otherwise collects the
/// elements of the reduced basis that are positive sums of squares of
/// variables and tries RealSquares.
Certificate certify_real(const Ideal& ideal, const GroebnerOptions& opts = {});
/// Sum of c_v v^2 with every c_v > 0 and nothing else.
bool is_square_sum(const Poly& p);
/// I plus every variable occurring in the targets.
Ideal vanishing_ideal(const Ideal& ideal, const std::vector<Poly>& square_sums);

/// True for the certificates that refute real solutions (all but witnesses
/// and Inconclusive).
bool refutes(const Certificate& c);

/// Re-verifies without any search: witnesses by evaluation, unit and
/// membership claims by replaying their traces. Inconclusive is never valid.
bool check_certificate(const Ideal& ideal, const Certificate& c);

/// The auxiliary ideals of the real-branch argument.
Ideal x1_branch_ideal(const Ideal& ideal);      // I + <x1, s|v|^2 - 1>, s appended
Ideal column_branch_ideal(const Ideal& ideal);  // I + <a13, a23, a33>
Ideal x1_only_ideal(const Ideal& ideal);        // I + <x1>
Poly real_branch_product(const Ideal& ideal);   // x1 |v|^2

/// Unit proof for an arbitrary ideal; nullopt when no unit was found.
std::optional<ComplexInfeasible> prove_unit(const Ideal& ideal, const GroebnerOptions& opts,
                                            std::size_t* pairs = nullptr);
bool check_unit(const Ideal& ideal, const ComplexInfeasible& c);

/// Membership proof via a complete basis; nullopt when the basis did not
/// complete within budget or target does not reduce to zero.
std::optional<Membership> prove_membership(const Ideal& ideal, const Poly& target, const GroebnerOptions& opts);
bool check_membership(const Ideal& ideal, const Membership& m);

/// Polynomials as [{"exponents": [...], "coeff": "p/q"}, ...].
json poly_to_json(const Poly& p, std::size_t nvars);
Poly poly_from_json(const json& j, std::size_t nvars, MonomialOrder o);
/// {"variables": [...], "order": ..., "generators": [...], "notes": {...}}
json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const json& j);
json certificate_to_json(const Certificate& c, const Ideal& ideal);
Certificate certificate_from_json(const json& j, const Ideal& ideal);

}  // namespace iwc
