#include <doctest.h>

#include <random>

#include "iwc/eps.hpp"
#include "iwc/matrix.hpp"
#include "iwc/scalar.hpp"

using namespace iwc;

namespace {

Scalar random_scalar(std::mt19937& rng, Field f) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  if (f == Field::Rational) return Scalar(mpq_class(num(rng), den(rng)), f);
  mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return Scalar(re, im);
}

EpsPoly random_poly(std::mt19937& rng, Field f) {
  std::uniform_int_distribution<int> deg(0, 3), sparse(0, 2);
  EpsPoly p(f);
  int d = deg(rng);
  for (int e = 0; e <= d; ++e)
    if (sparse(rng)) p.add_term(e, random_scalar(rng, f));
  return p;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  CHECK(Scalar::parse("1/2") + Scalar::parse("1/3") == Scalar::parse("5/6"));
  CHECK(Scalar::parse("-4/6").str() == "-2/3");
  Scalar i = Scalar::imag_unit();
  CHECK(i * i == Scalar(-1, Field::Gaussian));
  CHECK(Scalar::parse("1/2-3/4i", Field::Gaussian).im() == mpq_class(-3, 4));
  CHECK(Scalar::parse("-i", Field::Gaussian) == -i);
  CHECK((Scalar::parse("1+i", Field::Gaussian)).inverse() == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) + Scalar(1, Field::Gaussian), FieldModeMismatch);
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::exception);
  CHECK_THROWS_AS(Scalar::parse("i"), std::exception);
  CHECK_THROWS_AS(i.in(Field::Rational), FieldModeMismatch);
}

TEST_CASE("scalar field axioms on random samples") {
  std::mt19937 rng(7);
  for (Field f : {Field::Rational, Field::Gaussian})
    for (int trial = 0; trial < 300; ++trial) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(Scalar::parse(a.str(), f) == a);
    }
}

TEST_CASE("matrix linear algebra") {
  Matrix a = Matrix::from_rows({{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}});
  CHECK(a.determinant() == Scalar(1));
  CHECK(a * a.inverse() == Matrix::identity(4));
  Matrix s = Matrix::from_rows({{1, 2}, {2, 4}});
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.inverse(), Singular);
  auto ns = s.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + Scalar(2) * ns[0][1] == Scalar(0));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m(3, 3), n(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        m(r, c) = random_scalar(rng, Field::Rational);
        n(r, c) = random_scalar(rng, Field::Rational);
      }
    CHECK((m * n).determinant() == m.determinant() * n.determinant());
    if (!m.determinant().is_zero()) CHECK(m.inverse() * m == Matrix::identity(3));
  }
}

TEST_CASE("eps rational orders and limits") {
  const Field f = Field::Rational;
  EpsRational e3 = EpsRational::monomial(Scalar(1), 3);
  EpsRational e1 = EpsRational::monomial(Scalar(1), 1);
  CHECK((e3 / e1).ord_at_zero() == 2);
  CHECK(EpsRational(Scalar(0)).ord_at_zero() == std::nullopt);
  // (eps + eps^2) / eps -> 1
  EpsPoly num(f);
  num.add_term(1, Scalar(1));
  num.add_term(2, Scalar(1));
  EpsRational q = EpsRational(num, EpsPoly::constant(Scalar(1))) / e1;
  CHECK(q.limit_at_zero() == Scalar(1));
  CHECK((e1 / e3).limit_at_zero() == std::nullopt);
  CHECK((e3 / e1).limit_at_zero() == Scalar(0));
  // 1 / (1 + eps) has order 0 and limit 1
  EpsPoly den(f);
  den.add_term(0, Scalar(1));
  den.add_term(1, Scalar(1));
  EpsRational r(EpsPoly::constant(Scalar(1)), den);
  CHECK(r.ord_at_zero() == 0);
  CHECK(r.limit_at_zero() == Scalar(1));
  CHECK(r * EpsRational(den, EpsPoly::constant(Scalar(1))) == EpsRational(Scalar(1)));
}

TEST_CASE("eps rational field axioms on random samples") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    EpsPoly pn = random_poly(rng, Field::Rational), pd = random_poly(rng, Field::Rational);
    EpsPoly qn = random_poly(rng, Field::Rational), qd = random_poly(rng, Field::Rational);
    if (pd.is_zero() || qd.is_zero()) continue;
    EpsRational p(pn, pd), q(qn, qd);
    CHECK(p + q == q + p);
    CHECK((p + q) - q == p);
    CHECK(p * q == q * p);
    if (!q.is_zero()) CHECK((p / q) * q == p);
    // order is additive under multiplication
    auto op = p.ord_at_zero(), oq = q.ord_at_zero();
    if (op && oq) CHECK((p * q).ord_at_zero() == *op + *oq);
  }
}

TEST_CASE("eps matrix inverse") {
  EpsMatrix w = EpsMatrix::diag_powers({3, 2, 1, 1});
  Matrix a = Matrix::from_rows({{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}});
  EpsMatrix u = EpsMatrix::from_constant(a) * w;
  CHECK((u * u.inverse()).is_identity());
  CHECK(u.determinant().ord_at_zero() == 7);
}
