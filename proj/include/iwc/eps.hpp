#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwc/matrix.hpp"
#include "iwc/scalar.hpp"

namespace iwc {

/// Laurent polynomial in the contraction parameter eps. Zero coefficients
/// are never stored; the zero polynomial is the empty map.
class EpsPoly {
 public:
  explicit EpsPoly(Field f = Field::Rational) : field_(f) {}
  static EpsPoly constant(const Scalar& c);
  static EpsPoly monomial(const Scalar& c, int exponent);

  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Scalar>& terms() const { return terms_; }
  /// Lowest exponent with nonzero coefficient. Undefined (INT_MAX) for zero.
  int order() const { return terms_.empty() ? INT_MAX : terms_.begin()->first; }
  int degree() const { return terms_.empty() ? INT_MIN : terms_.rbegin()->first; }
  Scalar coeff(int e) const;
  Scalar lowest_coeff() const { return terms_.begin()->second; }
  Scalar leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(int e, const Scalar& c);
  EpsPoly shifted(int by) const;  // multiply by eps^by
  EpsPoly scaled(const Scalar& c) const;

  EpsPoly operator-() const;
  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  std::map<int, Scalar> terms_;
  Field field_;
};

/// Division with remainder for ordinary polynomials (all exponents >= 0).
void poly_divmod(const EpsPoly& a, const EpsPoly& b, EpsPoly& q, EpsPoly& r);
/// Monic gcd of two ordinary polynomials.
EpsPoly poly_gcd(EpsPoly a, EpsPoly b);

/// Exact rational function of eps, kept normalized: the denominator is an
/// ordinary polynomial with constant term 1, numerator and denominator are
/// coprime, and any power of eps lives in the numerator.
class EpsRational {
 public:
  explicit EpsRational(Field f = Field::Rational) : num_(f), den_(EpsPoly::constant(Scalar::one(f))) {}
  EpsRational(const Scalar& c);  // NOLINT
  EpsRational(EpsPoly num, EpsPoly den);
  static EpsRational monomial(const Scalar& c, int exponent);

  Field field() const { return num_.field(); }
  const EpsPoly& num() const { return num_; }
  const EpsPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;

  /// order(num) - order(den); nullopt encodes +infinity for the zero function.
  std::optional<int> ord_at_zero() const;
  /// Limit as eps -> +0; nullopt when the order is negative.
  std::optional<Scalar> limit_at_zero() const;

  EpsRational inverse() const;
  EpsRational operator-() const;
  friend EpsRational operator+(const EpsRational& a, const EpsRational& b);
  friend EpsRational operator-(const EpsRational& a, const EpsRational& b);
  friend EpsRational operator*(const EpsRational& a, const EpsRational& b);
  friend EpsRational operator/(const EpsRational& a, const EpsRational& b);
  /// Cross-multiplication equality.
  friend bool operator==(const EpsRational& a, const EpsRational& b);
  friend bool operator!=(const EpsRational& a, const EpsRational& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();

  EpsPoly num_;
  EpsPoly den_;
};

/// Square matrix of EpsRational entries, row-major.
class EpsMatrix {
 public:
  explicit EpsMatrix(std::size_t n = 0, Field f = Field::Rational);
  static EpsMatrix identity(std::size_t n, Field f = Field::Rational);
  static EpsMatrix from_constant(const Matrix& m);
  /// diag(eps^e_1, ..., eps^e_n).
  static EpsMatrix diag_powers(const std::vector<int>& exponents, Field f = Field::Rational);

  std::size_t n() const { return n_; }
  Field field() const { return field_; }
  EpsRational& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const EpsRational& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend EpsMatrix operator*(const EpsMatrix& a, const EpsMatrix& b);
  friend bool operator==(const EpsMatrix& a, const EpsMatrix& b);

  EpsRational determinant() const;
  /// Gauss-Jordan over the field of rational functions; throws Singular.
  EpsMatrix inverse() const;
  bool is_identity() const;

 private:
  std::size_t n_;
  Field field_;
  std::vector<EpsRational> data_;
};

}  // namespace iwc
