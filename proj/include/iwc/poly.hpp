#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iwc/scalar.hpp"

namespace iwc {

/// Enough for explicit-inverse systems in dimension 4 (32 entries) plus the
/// slack, virtual unknowns and the imaginary unit.
constexpr std::size_t kMaxVars = 40;

enum class MonomialOrder { DegRevLex, Lex };
const char* order_name(MonomialOrder o);
MonomialOrder parse_order(const std::string& s);

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;
  std::uint64_t mask = 0;  // bit v set iff e[v] > 0

  static Monomial var(std::size_t v, unsigned power = 1);
  void refresh();
  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& o) const {
    if (deg > o.deg || (mask & ~o.mask)) return false;
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (e[v] > o.e[v]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const { return (mask & o.mask) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Positive when a > b in the order.
int compare(const Monomial& a, const Monomial& b, MonomialOrder o);

struct Term {
  Monomial m;
  mpq_class c;
};

/// Sparse polynomial with rational coefficients; terms strictly decreasing
/// in the monomial order, no zero coefficients.
class Poly {
 public:
  explicit Poly(MonomialOrder o = MonomialOrder::DegRevLex) : order_(o) {}
  static Poly constant(const mpq_class& c, MonomialOrder o = MonomialOrder::DegRevLex);
  static Poly var(std::size_t v, MonomialOrder o = MonomialOrder::DegRevLex);
  /// Sorts and merges arbitrary terms.
  static Poly from_terms(std::vector<Term> terms, MonomialOrder o);
  /// Trusts that terms are strictly decreasing with nonzero coefficients.
  static Poly from_sorted(std::vector<Term> terms, MonomialOrder o) {
    Poly p(o);
    p.terms_ = std::move(terms);
    return p;
  }

  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const Term& lead() const { return terms_.front(); }
  int total_degree() const;

  Poly in(MonomialOrder o) const;
  Poly monic() const;
  Poly scaled(const mpq_class& c) const;
  Poly mul_term(const Monomial& m, const mpq_class& c) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// this - c * m * g in one merge pass.
  Poly sub_mul(const mpq_class& c, const Monomial& m, const Poly& g) const;

  /// Value at a point over Q or Q(i); the point has one entry per variable.
  Scalar eval(const std::vector<Scalar>& point) const;
  /// Substitutes the given variables by rational values.
  Poly partial_eval(const std::map<std::size_t, mpq_class>& values) const;
  /// Replaces variable v by polynomial q.
  Poly substitute(std::size_t v, const Poly& q) const;
  bool uses_var(std::size_t v) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Named variable list; the position of a name is its variable index and
/// also its rank in the monomial order (earlier = larger for lex).
class VarList {
 public:
  VarList() = default;
  explicit VarList(std::vector<std::string> names);
  std::size_t add(const std::string& name);
  std::size_t index(const std::string& name) const;  // throws UnknownName
  bool has(const std::string& name) const { return pos_.count(name) != 0; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> pos_;
};

struct Ideal {
  VarList vars;
  MonomialOrder order = MonomialOrder::DegRevLex;
  std::vector<Poly> gens;
  /// Free-form metadata (source of the equations, transcription notes).
  std::map<std::string, std::string> notes;

  Poly var(const std::string& name) const { return Poly::var(vars.index(name), order); }
  Poly constant(const mpq_class& c) const { return Poly::constant(c, order); }
  /// Appends p unless it is zero or a rational multiple of a generator.
  void add(const Poly& p);
  /// Copy with extra generators appended.
  Ideal with(const std::vector<Poly>& extra) const;
  Ideal in(MonomialOrder o) const;
  /// Same generators over a permuted variable list (names must match).
  Ideal reordered(const std::vector<std::string>& names) const;
};

/// Recursive-descent parser for "a11*a22 - 3/2*t^2 + 1" over the given names.
Poly parse_poly(const std::string& s, const VarList& vars, MonomialOrder o);

}  // namespace iwc
