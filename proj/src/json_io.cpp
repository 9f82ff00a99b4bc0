#include "iwc/json_io.hpp"

#include <fstream>

namespace iwc {

json to_json(const Scalar& s) {
  if (s.field() == Field::Rational) return s.re().get_str();
  return json{{"re", s.re().get_str()}, {"im", s.im().get_str()}};
}

Scalar scalar_from_json(const json& j, Field f) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
  if (j.is_number_integer()) return Scalar(j.get<long>(), f);
  if (j.is_object() && j.contains("re")) {
    mpq_class re = parse_rational(j.at("re").get<std::string>());
    mpq_class im = j.contains("im") ? parse_rational(j.at("im").get<std::string>()) : mpq_class(0);
    if (f == Field::Rational) {
      if (sgn(im) != 0) throw FieldModeMismatch("gaussian scalar in rational mode");
      return Scalar(re, f);
    }
    return Scalar(re, im);
  }
  throw ParseError("cannot parse scalar from " + j.dump());
}

json to_json(const EpsPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_json(c);
  return out;
}

EpsPoly eps_poly_from_json(const json& j, Field f) {
  if (!j.is_object()) throw ParseError("EpsPoly must be an object");
  EpsPoly p(f);
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = std::stoi(key, &used);
    if (used != key.size()) throw ParseError("bad exponent key: " + key);
    p.add_term(e, scalar_from_json(value, f));
  }
  return p;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Field f) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::size_t n = j.size();
  std::size_t cols = j[0].size();
  Matrix m(n, cols, f);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], f);
  }
  return m;
}

json brackets_to_json(const StructureTensor& t) {
  json out = json::array();
  for (const auto& b : t.brackets()) out.push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"c", to_json(b.c)}});
  return out;
}

json algebra_to_json(const StructureTensor& t, const std::string& name) {
  return {{"name", name}, {"dim", t.dim()}, {"field", field_name(t.field())}, {"brackets", brackets_to_json(t)}};
}

StructureTensor algebra_from_json(const json& j, std::string* name) {
  try {
    std::size_t n = j.at("dim").get<std::size_t>();
    Field f = parse_field(j.value("field", std::string("Q")));
    StructureTensor t(n, f);
    for (const auto& b : j.at("brackets")) {
      auto i = b.at("i").get<std::size_t>();
      auto jj = b.at("j").get<std::size_t>();
      auto k = b.at("k").get<std::size_t>();
      if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n)
        throw ParseError("bracket index out of range");
      if (i >= jj) throw ParseError("brackets must list i < j entries only");
      if (!t(i - 1, jj - 1, k - 1).is_zero()) throw ParseError("duplicate bracket entry");
      t.set_bracket(i - 1, jj - 1, k - 1, scalar_from_json(b.at("c"), f));
    }
    auto violations = validate(t);
    if (!violations.empty()) throw InvalidAlgebra("algebra fails validation: " + violations.front().str());
    if (name) *name = j.value("name", std::string());
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace iwc
