#include "iwc/eps.hpp"

#include <sstream>

namespace iwc {

// ---------------------------------------------------------------- EpsPoly

EpsPoly EpsPoly::constant(const Scalar& c) { return monomial(c, 0); }

EpsPoly EpsPoly::monomial(const Scalar& c, int exponent) {
  EpsPoly p(c.field());
  p.add_term(exponent, c);
  return p;
}

Scalar EpsPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void EpsPoly::add_term(int e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EpsPoly EpsPoly::shifted(int by) const {
  EpsPoly p(field_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
  return p;
}

EpsPoly EpsPoly::scaled(const Scalar& c) const {
  EpsPoly p(field_);
  if (c.is_zero()) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
  return p;
}

EpsPoly EpsPoly::operator-() const { return scaled(-Scalar::one(field_)); }

EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly p = a;
  for (const auto& [e, c] : b.terms_) p.add_term(e, c);
  return p;
}

EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly p = a;
  for (const auto& [e, c] : b.terms_) p.add_term(e, -c);
  return p;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  if (a.field_ != b.field_) throw FieldModeMismatch();
  EpsPoly p(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

std::string EpsPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second << ")";
    if (it->first != 0) os << "*eps^" << it->first;
  }
  return os.str();
}

void poly_divmod(const EpsPoly& a, const EpsPoly& b, EpsPoly& q, EpsPoly& r) {
  if (b.is_zero()) throw DivisionByZero();
  q = EpsPoly(a.field());
  r = a;
  int db = b.degree();
  Scalar lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    Scalar factor = r.leading_coeff() / lb;
    q.add_term(shift, factor);
    r = r - b.shifted(shift).scaled(factor);
  }
}

EpsPoly poly_gcd(EpsPoly a, EpsPoly b) {
  while (!b.is_zero()) {
    EpsPoly q(a.field()), r(a.field());
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading_coeff().inverse());
}

// ------------------------------------------------------------ EpsRational

EpsRational::EpsRational(const Scalar& c)
    : num_(EpsPoly::constant(c)), den_(EpsPoly::constant(Scalar::one(c.field()))) {}

EpsRational::EpsRational(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.field() != den_.field()) throw FieldModeMismatch();
  normalize();
}

EpsRational EpsRational::monomial(const Scalar& c, int exponent) {
  EpsRational r(c.field());
  r.num_ = EpsPoly::monomial(c, exponent);
  return r;
}

void EpsRational::normalize() {
  Field f = num_.field();
  if (num_.is_zero()) {
    den_ = EpsPoly::constant(Scalar::one(f));
    return;
  }
  int k = num_.order() - den_.order();
  EpsPoly n = num_.shifted(-num_.order());
  EpsPoly d = den_.shifted(-den_.order());
  if (d.degree() > 0 && n.degree() > 0) {
    EpsPoly g = poly_gcd(n, d);
    if (g.degree() > 0) {
      EpsPoly q(f), r(f);
      poly_divmod(n, g, q, r);
      n = q;
      poly_divmod(d, g, q, r);
      d = q;
    }
  }
  Scalar c0 = d.coeff(0);
  if (!c0.is_one()) {
    Scalar inv = c0.inverse();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = n.shifted(k);
  den_ = std::move(d);
}

bool EpsRational::is_constant() const {
  return num_.is_zero() || (num_.terms().size() == 1 && num_.order() == 0 && den_.degree() == 0);
}

std::optional<int> EpsRational::ord_at_zero() const {
  if (num_.is_zero()) return std::nullopt;
  return num_.order() - den_.order();
}

std::optional<Scalar> EpsRational::limit_at_zero() const {
  auto ord = ord_at_zero();
  if (!ord || *ord > 0) return Scalar::zero(field());
  if (*ord < 0) return std::nullopt;
  return num_.lowest_coeff() / den_.lowest_coeff();
}

EpsRational EpsRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return EpsRational(den_, num_);
}

EpsRational EpsRational::operator-() const {
  EpsRational r = *this;
  r.num_ = -r.num_;
  return r;
}

EpsRational operator+(const EpsRational& a, const EpsRational& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (a.den_ == b.den_) return EpsRational(a.num_ + b.num_, a.den_);
  return EpsRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EpsRational operator-(const EpsRational& a, const EpsRational& b) { return a + (-b); }

EpsRational operator*(const EpsRational& a, const EpsRational& b) {
  if (a.is_zero() || b.is_zero()) return EpsRational(a.field());
  return EpsRational(a.num_ * b.num_, a.den_ * b.den_);
}

EpsRational operator/(const EpsRational& a, const EpsRational& b) { return a * b.inverse(); }

bool operator==(const EpsRational& a, const EpsRational& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string EpsRational::str() const {
  if (den_.degree() == 0 && den_.coeff(0).is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// -------------------------------------------------------------- EpsMatrix

EpsMatrix::EpsMatrix(std::size_t n, Field f) : n_(n), field_(f), data_(n * n, EpsRational(f)) {}

EpsMatrix EpsMatrix::identity(std::size_t n, Field f) {
  EpsMatrix m(n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = EpsRational(Scalar::one(f));
  return m;
}

EpsMatrix EpsMatrix::from_constant(const Matrix& c) {
  if (!c.square()) throw DimensionMismatch("EpsMatrix must be square");
  EpsMatrix m(c.rows(), c.field());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = EpsRational(c(i, j));
  return m;
}

EpsMatrix EpsMatrix::diag_powers(const std::vector<int>& exponents, Field f) {
  EpsMatrix m(exponents.size(), f);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    m(i, i) = EpsRational::monomial(Scalar::one(f), exponents[i]);
  return m;
}

EpsMatrix operator*(const EpsMatrix& a, const EpsMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("EpsMatrix product");
  if (a.field_ != b.field_) throw FieldModeMismatch();
  EpsMatrix c(a.n_, a.field_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const EpsMatrix& a, const EpsMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

EpsRational EpsMatrix::determinant() const {
  EpsMatrix m = *this;
  EpsRational det(Scalar::one(field_));
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t p = col;
    while (p < n_ && m(p, col).is_zero()) ++p;
    if (p == n_) return EpsRational(field_);
    if (p != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    EpsRational inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (m(r, col).is_zero()) continue;
      EpsRational factor = m(r, col) * inv;
      for (std::size_t j = col; j < n_; ++j)
        if (!m(col, j).is_zero()) m(r, j) = m(r, j) - factor * m(col, j);
    }
  }
  return det;
}

EpsMatrix EpsMatrix::inverse() const {
  EpsMatrix m = *this;
  EpsMatrix inv = identity(n_, field_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t p = col;
    while (p < n_ && m(p, col).is_zero()) ++p;
    if (p == n_) throw Singular("EpsMatrix is singular");
    if (p != col)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m(p, j), m(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    EpsRational pivot_inv = m(col, col).inverse();
    for (std::size_t j = 0; j < n_; ++j) {
      if (!m(col, j).is_zero()) m(col, j) = m(col, j) * pivot_inv;
      if (!inv(col, j).is_zero()) inv(col, j) = inv(col, j) * pivot_inv;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      EpsRational factor = m(r, col);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!m(col, j).is_zero()) m(r, j) = m(r, j) - factor * m(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) = inv(r, j) - factor * inv(col, j);
      }
    }
  }
  return inv;
}

bool EpsMatrix::is_identity() const { return *this == identity(n_, field_); }

}  // namespace iwc
