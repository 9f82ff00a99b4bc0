#include "iwc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "iwc/errors.hpp"

namespace iwc {

const char* order_name(MonomialOrder o) { return o == MonomialOrder::Lex ? "lex" : "degrevlex"; }

MonomialOrder parse_order(const std::string& s) {
  if (s == "lex") return MonomialOrder::Lex;
  if (s == "degrevlex" || s == "grevlex") return MonomialOrder::DegRevLex;
  throw ParseError("unknown monomial order: " + s);
}

Monomial Monomial::var(std::size_t v, unsigned power) {
  if (v >= kMaxVars) throw DimensionMismatch("too many variables");
  Monomial m;
  m.e[v] = static_cast<std::uint8_t>(power);
  m.refresh();
  return m;
}

void Monomial::refresh() {
  deg = 0;
  mask = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (e[v]) {
      deg += e[v];
      mask |= std::uint64_t{1} << v;
    }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    unsigned x = unsigned(a.e[v]) + b.e[v];
    if (x > 255) throw std::overflow_error("monomial exponent overflow");
    m.e[v] = static_cast<std::uint8_t>(x);
  }
  m.deg = a.deg + b.deg;
  m.mask = a.mask | b.mask;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) m.e[v] = a.e[v] - b.e[v];
  m.refresh();
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) m.e[v] = std::max(a.e[v], b.e[v]);
  m.refresh();
  return m;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder o) {
  if (o == MonomialOrder::DegRevLex) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t v = kMaxVars; v-- > 0;)
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    return 0;
  }
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
  return 0;
}

Poly Poly::constant(const mpq_class& c, MonomialOrder o) {
  Poly p(o);
  if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::var(std::size_t v, MonomialOrder o) {
  Poly p(o);
  p.terms_.push_back({Monomial::var(v), mpq_class(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms, MonomialOrder o) {
  std::sort(terms.begin(), terms.end(), [o](const Term& a, const Term& b) { return compare(a.m, b.m, o) > 0; });
  Poly p(o);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) p.terms_.back().c += t.c;
    else p.terms_.push_back(std::move(t));
    if (sgn(p.terms_.back().c) == 0) p.terms_.pop_back();
  }
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.deg);
  return d;
}

Poly Poly::in(MonomialOrder o) const {
  if (o == order_) return *this;
  return from_terms(terms_, o);
}

Poly Poly::monic() const {
  if (terms_.empty() || terms_[0].c == 1) return *this;
  return scaled(1 / terms_[0].c);
}

Poly Poly::scaled(const mpq_class& c) const {
  Poly p(order_);
  if (sgn(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m, t.c * c});
  return p;
}

Poly Poly::mul_term(const Monomial& m, const mpq_class& c) const {
  Poly p(order_);
  if (sgn(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m * m, t.c * c});
  return p;
}

Poly Poly::operator-() const { return scaled(-1); }

namespace {

void check_orders(const Poly& a, const Poly& b) {
  if (a.order() != b.order()) throw OrderMismatch("polynomials use different monomial orders");
}

}  // namespace

Poly Poly::sub_mul(const mpq_class& c, const Monomial& m, const Poly& g) const {
  check_orders(*this, g);
  Poly out(order_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0, shifted = SIZE_MAX;
  Term cur;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && shifted != j) {
      cur.m = g.terms_[j].m * m;
      shifted = j;
    }
    int cmp = i == terms_.size() ? -1 : j == g.terms_.size() ? 1 : compare(terms_[i].m, cur.m, order_);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({cur.m, -c * g.terms_[j++].c});
    } else {
      mpq_class v = terms_[i].c - c * g.terms_[j].c;
      if (sgn(v) != 0) out.terms_.push_back({cur.m, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) { return a.sub_mul(mpq_class(-1), Monomial{}, b); }

Poly operator-(const Poly& a, const Poly& b) { return a.sub_mul(mpq_class(1), Monomial{}, b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_orders(a, b);
  Poly out(a.order());
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  for (const auto& t : small.terms()) out = out.sub_mul(-t.c, t.m, large);
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  Field f = Field::Rational;
  for (const auto& s : point)
    if (s.field() == Field::Gaussian) f = Field::Gaussian;
  Scalar sum = Scalar::zero(f);
  for (const auto& t : terms_) {
    Scalar v(t.c, Field::Rational);
    v = v.in(f);
    for (std::size_t x = 0; x < kMaxVars; ++x)
      for (unsigned p = 0; p < t.m.e[x]; ++p) {
        if (x >= point.size()) throw DimensionMismatch("evaluation point too short");
        v *= point[x].in(f);
      }
    sum += v;
  }
  return sum;
}

Poly Poly::partial_eval(const std::map<std::size_t, mpq_class>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n{t.m, t.c};
    for (const auto& [v, val] : values) {
      if (!t.m.e[v]) continue;
      for (unsigned p = 0; p < t.m.e[v]; ++p) n.c *= val;
      n.m.e[v] = 0;
    }
    if (sgn(n.c) == 0) continue;
    n.m.refresh();
    out.push_back(std::move(n));
  }
  return from_terms(std::move(out), order_);
}

Poly Poly::substitute(std::size_t v, const Poly& q) const {
  Poly out(order_);
  std::vector<Poly> powers{Poly::constant(1, order_)};
  for (const auto& t : terms_) {
    unsigned k = t.m.e[v];
    while (powers.size() <= k) powers.push_back(powers.back() * q);
    Monomial rest = t.m;
    rest.e[v] = 0;
    rest.refresh();
    out = out.sub_mul(-t.c, rest, powers[k]);
  }
  return out;
}

bool Poly::uses_var(std::size_t v) const {
  for (const auto& t : terms_)
    if (t.m.e[v]) return true;
  return false;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.c;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    if (!first || sgn(c) < 0) c = abs(c);
    first = false;
    bool coeff_shown = !(c == 1) || t.m.is_one();
    if (coeff_shown) os << c.get_str();
    bool need_star = coeff_shown;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (!t.m.e[v]) continue;
      if (need_star) os << "*";
      os << (v < names.size() ? names[v] : "x" + std::to_string(v));
      if (t.m.e[v] > 1) os << "^" << unsigned(t.m.e[v]);
      need_star = true;
    }
  }
  return os.str();
}

VarList::VarList(std::vector<std::string> names) {
  for (auto& n : names) add(n);
}

std::size_t VarList::add(const std::string& name) {
  auto it = pos_.find(name);
  if (it != pos_.end()) return it->second;
  if (names_.size() >= kMaxVars) throw DimensionMismatch("too many variables");
  pos_[name] = names_.size();
  names_.push_back(name);
  return names_.size() - 1;
}

std::size_t VarList::index(const std::string& name) const {
  auto it = pos_.find(name);
  if (it == pos_.end()) throw UnknownName(name);
  return it->second;
}

void Ideal::add(const Poly& p) {
  if (p.is_zero()) return;
  Poly q = p.in(order);
  const Poly qm = q.monic();
  for (const auto& g : gens)
    if (g.monic() == qm) return;
  gens.push_back(std::move(q));
}

Ideal Ideal::with(const std::vector<Poly>& extra) const {
  Ideal out = *this;
  for (const auto& p : extra) out.add(p);
  return out;
}

Ideal Ideal::in(MonomialOrder o) const {
  Ideal out = *this;
  out.order = o;
  for (auto& g : out.gens) g = g.in(o);
  return out;
}

Ideal Ideal::reordered(const std::vector<std::string>& names) const {
  if (names.size() != vars.size()) throw DimensionMismatch("variable permutation size");
  Ideal out;
  out.vars = VarList(names);
  out.order = order;
  out.notes = notes;
  std::vector<std::size_t> to(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) to[v] = out.vars.index(vars.names()[v]);
  for (const auto& g : gens) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Term n{Monomial{}, t.c};
      for (std::size_t v = 0; v < vars.size(); ++v) n.m.e[to[v]] = t.m.e[v];
      n.m.refresh();
      terms.push_back(std::move(n));
    }
    out.gens.push_back(Poly::from_terms(std::move(terms), order));
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const VarList& vars, MonomialOrder o) : s_(s), vars_(vars), o_(o) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial parse error at " + std::to_string(pos_) + ": " + what + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly p(o_);
    bool neg = eat('-');
    if (!neg) eat('+');
    p = term();
    if (neg) p = -p;
    while (true) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  Poly term() {
    Poly p = factor();
    while (eat('*')) p *= factor();
    return p;
  }
  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      unsigned k = std::stoul(s_.substr(start, pos_ - start));
      Poly r = Poly::constant(1, o_);
      for (unsigned i = 0; i < k; ++i) r *= base;
      return r;
    }
    return base;
  }
  Poly atom() {
    skip();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        std::size_t save = pos_++;
        std::size_t d0 = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d0 == pos_) pos_ = save;
        else num += "/" + s_.substr(d0, pos_ - d0);
      }
      return Poly::constant(parse_rational(num), o_);
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (!vars_.has(name)) fail("unknown variable " + name);
      return Poly::var(vars_.index(name), o_);
    }
    fail("operand expected");
  }

  const std::string& s_;
  const VarList& vars_;
  MonomialOrder o_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& s, const VarList& vars, MonomialOrder o) { return Parser(s, vars, o).parse(); }

}  // namespace iwc
