#pragma once

#include <json.hpp>
#include <string>

#include "iwc/algebra.hpp"
#include "iwc/eps.hpp"
#include "iwc/matrix.hpp"
#include "iwc/scalar.hpp"

namespace iwc {

using json = nlohmann::json;

/// Rational: "p/q" string. Gaussian: {"re": "p/q", "im": "p/q"}.
json to_json(const Scalar& s);
/// Accepts both encodings; a plain string is parsed in field f (so "1+i"
/// is also accepted in gaussian mode), numbers are accepted as integers.
Scalar scalar_from_json(const json& j, Field f);

/// {"exponent": scalar, ...} with exponents as decimal strings.
json to_json(const EpsPoly& p);
EpsPoly eps_poly_from_json(const json& j, Field f);

/// n x n array of scalars.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, Field f);

/// Bracket-list form: [{"i":1,"j":2,"k":1,"c":"1"}, ...] with i < j.
json brackets_to_json(const StructureTensor& t);

/// {"name":..., "dim":n, "field":"Q"|"Q(i)", "brackets":[...]}
json algebra_to_json(const StructureTensor& t, const std::string& name);
/// Synthesizes the antisymmetric completion from i<j entries and rejects
/// tensors failing validate (InvalidAlgebra).
StructureTensor algebra_from_json(const json& j, std::string* name = nullptr);

json read_json_file(const std::string& path);

}  // namespace iwc
