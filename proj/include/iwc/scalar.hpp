#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "iwc/errors.hpp"

namespace iwc {

/// Ground field of a computation. Rational stands in for the reals,
/// Gaussian (Q(i)) for the complex numbers.
enum class Field { Rational, Gaussian };

const char* field_name(Field f);  // "Q" or "Q(i)"
Field parse_field(const std::string& s);

/// Exact element of Q or Q(i). Both parts are kept canonical by GMP
/// (coprime, positive denominator); the imaginary part is zero in
/// rational mode.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v, Field f = Field::Rational) : re_(v), field_(f) {}  // NOLINT
  Scalar(mpq_class re, Field f = Field::Rational);                   // NOLINT
  Scalar(mpq_class re, mpq_class im);  // always gaussian

  static Scalar zero(Field f) { return Scalar(0L, f); }
  static Scalar one(Field f) { return Scalar(1L, f); }
  static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Accepts "p", "p/q", and in gaussian mode also "a+bi" forms such as
  /// "i", "-i", "1/2-3/4i".
  static Scalar parse(const std::string& s, Field f = Field::Rational);

  Field field() const { return field_; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// Re-tag in another field. Gaussian -> rational requires im == 0.
  Scalar in(Field f) const;

  Scalar inverse() const;
  Scalar conj() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Values compare equal regardless of mode tag only when both are real;
  /// otherwise the modes must agree.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Rational: "p/q" (or "p"). Gaussian: "re+imi" with the same part syntax.
  std::string str() const;

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_) throw FieldModeMismatch();
  }

  mpq_class re_{0};
  mpq_class im_{0};
  Field field_ = Field::Rational;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

mpq_class parse_rational(const std::string& s);

}  // namespace iwc
