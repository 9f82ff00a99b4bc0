#include <doctest.h>

#include <random>
#include <set>

#include "iwc/algebra.hpp"
#include "iwc/json_io.hpp"

using namespace iwc;

namespace {

Matrix random_invertible(std::mt19937& rng, std::size_t n, Field f = Field::Rational) {
  std::uniform_int_distribution<long> d(-2, 2);
  while (true) {
    Matrix m(n, n, f);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(d(rng), f);
    if (!m.determinant().is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("every catalog entry is a Lie algebra") {
  for (const auto& name : catalog_names()) {
    auto e = catalog_get(name);
    CHECK_MESSAGE(validate(e.tensor).empty(), name);
  }
}

TEST_CASE("validate reports Jacobi failures") {
  StructureTensor t(3);
  t.set_bracket(0, 1, 2, Scalar(1));
  t.set_bracket(0, 2, 0, Scalar(1));
  t.set_bracket(1, 2, 1, Scalar(1));
  // [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e2: Jacobi gives [e1,[e2,e3]] + ... != 0
  auto v = validate(t);
  CHECK(!v.empty());
  CHECK(v.front().kind == Violation::Kind::Jacobi);

  StructureTensor bad(2);
  bad(0, 1, 0) = Scalar(1);  // no antisymmetric partner
  CHECK(validate(bad).front().kind == Violation::Kind::Antisymmetry);
}

TEST_CASE("catalog conventions") {
  auto so3 = catalog_get("so3").tensor;
  CHECK(so3(0, 1, 2) == Scalar(1));
  CHECK(so3(1, 2, 0) == Scalar(1));
  CHECK(so3(2, 0, 1) == Scalar(1));
  auto g41 = catalog_get("g4.1").tensor;
  CHECK(g41.str() == "[e2,e4]=e1, [e3,e4]=e2");
  CHECK(catalog_resolve("g4.10") == "2g2.1");
  CHECK(catalog_resolve("heisenberg4") == "heisenberg3+A1");
  CHECK_THROWS_AS(catalog_resolve("nope"), UnknownName);
}

TEST_CASE("fingerprints separate the classification lists") {
  for (Field f : {Field::Rational, Field::Gaussian})
    for (std::size_t n : {3u, 4u}) {
      std::set<std::string> seen;
      auto names = catalog_names(f, n);
      for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b)
          CHECK_MESSAGE(fingerprint(catalog_get(names[a], f).tensor) != fingerprint(catalog_get(names[b], f).tensor),
                        names[a] << " vs " << names[b]);
      for (const auto& name : names) CHECK(match_catalog(catalog_get(name, f).tensor) == catalog_resolve(name));
    }
  // Killing inertia: compact so(3) is negative definite, sl(2, R) is not.
  auto so3 = fingerprint(catalog_get("so3").tensor);
  auto sl2 = fingerprint(catalog_get("sl2").tensor);
  REQUIRE(so3.killing_inertia);
  CHECK(*so3.killing_inertia == std::pair<std::size_t, std::size_t>{0, 3});
  CHECK(*sl2.killing_inertia == std::pair<std::size_t, std::size_t>{2, 1});
}

TEST_CASE("g1+g3.2 is told apart from the diagonal family") {
  auto diagonal = [](mpq_class a) {
    StructureTensor t(4, Field::Gaussian);
    t.set_bracket(1, 3, 1, Scalar(1, Field::Gaussian));
    t.set_bracket(2, 3, 2, Scalar(a, Field::Gaussian));
    return t;
  };
  auto jordan = fingerprint(catalog_get("g1+g3.2").tensor);
  for (mpq_class a : {mpq_class(1), mpq_class(2), mpq_class(-2), mpq_class(1, 3)}) {
    CAPTURE(a.get_str());
    auto fp = fingerprint(diagonal(a));
    CHECK(fp.derived_series == jordan.derived_series);
    CHECK(fp.center == jordan.center);
    CHECK(fp != jordan);
    CHECK(match_catalog(diagonal(a), {"g1+g3.2"}) == std::nullopt);
  }
  CHECK(fingerprint(diagonal(2)) == fingerprint(diagonal(mpq_class(1, 2))));
  CHECK(fingerprint(diagonal(2)) != fingerprint(diagonal(3)));
  CHECK(fingerprint(diagonal(1)).action_commutant == 4);
  CHECK(jordan.action_commutant == 2);
}

TEST_CASE("change of basis: composition law and invariance") {
  std::mt19937 rng(5);
  for (const auto& name : catalog_names()) {
    auto t = catalog_get(name).tensor;
    for (int trial = 0; trial < 4; ++trial) {
      Matrix u = random_invertible(rng, t.dim()), v = random_invertible(rng, t.dim());
      auto tu = change_basis(t, u);
      CHECK(validate(tu).empty());
      CHECK(change_basis(tu, v) == change_basis(t, u * v));
      CHECK(change_basis(tu, u.inverse()) == t);
      CHECK(fingerprint(tu) == fingerprint(t));
    }
  }
  CHECK_THROWS_AS(change_basis(catalog_get("so3").tensor, Matrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})),
                  Singular);
}

TEST_CASE("the two real forms of 2g2.1 become isomorphic over Q(i)") {
  const Scalar i = Scalar::imag_unit();
  const Field g = Field::Gaussian;
  const Scalar h(mpq_class(1, 2), g);
  Matrix u = Matrix::from_scalar_rows({
      {Scalar(1, g), Scalar(0, g), Scalar(1, g), Scalar(0, g)},
      {i, Scalar(0, g), -i, Scalar(0, g)},
      {Scalar(0, g), h, Scalar(0, g), h},
      {Scalar(0, g), -i * h, Scalar(0, g), i * h}});
  auto a410 = catalog_get("A4.10", g).tensor;
  CHECK(change_basis(a410, u) == catalog_get("2g2.1").tensor);
  // Over Q they differ.
  CHECK(fingerprint(catalog_get("A4.10").tensor) != fingerprint(catalog_get("2A2.1").tensor));
}

TEST_CASE("algebra JSON round trip and rejection") {
  for (const auto& name : catalog_names()) {
    auto e = catalog_get(name);
    std::string back;
    auto t = algebra_from_json(algebra_to_json(e.tensor, name), &back);
    CHECK(t == e.tensor);
    CHECK(back == name);
  }
  json bad = {{"dim", 3}, {"brackets", {{{"i", 1}, {"j", 2}, {"k", 3}, {"c", "1"}}, {{"i", 1}, {"j", 3}, {"k", 1}, {"c", "1"}}, {{"i", 2}, {"j", 3}, {"k", 2}, {"c", "1"}}}}};
  CHECK_THROWS_AS(algebra_from_json(bad), InvalidAlgebra);
  json range = {{"dim", 2}, {"brackets", {{{"i", 1}, {"j", 3}, {"k", 1}, {"c", "1"}}}}};
  CHECK_THROWS_AS(algebra_from_json(range), ParseError);
  CHECK_THROWS_AS(algebra_from_json(json{{"dim", 9}, {"brackets", json::array()}}), DimensionMismatch);
}
