#include "iwc/scalar.hpp"

#include <cctype>
#include <ostream>

namespace iwc {

const char* field_name(Field f) { return f == Field::Rational ? "Q" : "Q(i)"; }

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "rational" || s == "real") return Field::Rational;
  if (s == "Q(i)" || s == "gaussian" || s == "complex") return Field::Gaussian;
  throw ParseError("unknown field: " + s);
}

mpq_class parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational");
  if (s[0] == '+') s.erase(0, 1);
  std::size_t digits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++digits;
    } else if (!(c == '/' || (c == '-' && i == 0))) {
      throw ParseError("bad rational: " + raw);
    }
  }
  if (digits == 0) throw ParseError("bad rational: " + raw);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + raw);
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

Scalar::Scalar(mpq_class re, Field f) : re_(std::move(re)), field_(f) { re_.canonicalize(); }

Scalar::Scalar(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)), field_(Field::Gaussian) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(const std::string& raw, Field f) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s), f);
  if (f != Field::Gaussian) throw FieldModeMismatch("imaginary literal in rational mode: " + raw);
  // Split "re(+|-)im i" at the last sign that is not the leading one.
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part);
  return Scalar(re, parse_rational(im_part));
}

Scalar Scalar::in(Field f) const {
  if (f == Field::Rational && sgn(im_) != 0)
    throw FieldModeMismatch("non-real value " + str() + " in rational mode");
  Scalar r = *this;
  r.field_ = f;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_ == Field::Rational) return Scalar(mpq_class(1 / re_), field_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  r.im_ = -r.im_;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  re_ += o.re_;
  if (field_ == Field::Gaussian) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  re_ -= o.re_;
  if (field_ == Field::Gaussian) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_ == Field::Rational) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  if (o.is_zero()) throw DivisionByZero();
  if (field_ == Field::Rational) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::str() const {
  if (field_ == Field::Rational || sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (im_ == 1) {
    out += out.empty() ? "i" : "+i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    if (sgn(im_) > 0 && !out.empty()) out += "+";
    out += im_.get_str() + "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace iwc
