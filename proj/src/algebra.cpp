#include "iwc/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace iwc {

StructureTensor::StructureTensor(std::size_t n, Field f)
    : n_(n), field_(f), c_(n * n * n, Scalar::zero(f)) {
  if (n == 0 || n > kMaxDim) throw DimensionMismatch("algebra dimension must be in 1..8");
}

void StructureTensor::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  (*this)(i, j, k) = v.in(field_);
  (*this)(j, i, k) = -v.in(field_);
}

std::vector<Scalar> StructureTensor::bracket(const std::vector<Scalar>& x,
                                             const std::vector<Scalar>& y) const {
  std::vector<Scalar> out(n_, Scalar::zero(field_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (!(*this)(i, j, k).is_zero()) out[k] += xy * (*this)(i, j, k);
    }
  }
  return out;
}

Matrix StructureTensor::ad(std::size_t i) const {
  Matrix m(n_, n_, field_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m(k, j) = (*this)(i, j, k);
  return m;
}

bool StructureTensor::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

StructureTensor StructureTensor::in(Field f) const {
  StructureTensor t = *this;
  t.field_ = f;
  for (auto& s : t.c_) s = s.in(f);
  return t;
}

std::vector<StructureTensor::Bracket> StructureTensor::brackets() const {
  std::vector<Bracket> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!(*this)(i, j, k).is_zero()) out.push_back({i + 1, j + 1, k + 1, (*this)(i, j, k)});
  return out;
}

std::string StructureTensor::str() const {
  std::ostringstream os;
  bool first_pair = true;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      std::string rhs;
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& c = (*this)(i, j, k);
        if (c.is_zero()) continue;
        std::string coeff;
        if (c.is_one()) {
          coeff = rhs.empty() ? "" : "+";
        } else if (c == -Scalar::one(field_)) {
          coeff = "-";
        } else {
          std::string s = c.str();
          bool needs_paren = !c.is_real() || s.find('/') != std::string::npos;
          coeff = (rhs.empty() || s[0] == '-' ? "" : "+") + (needs_paren ? "(" + s + ")" : s) + "*";
        }
        rhs += coeff + "e" + std::to_string(k + 1);
      }
      if (rhs.empty()) continue;
      os << (first_pair ? "" : ", ") << "[e" << i + 1 << ",e" << j + 1 << "]=" << rhs;
      first_pair = false;
    }
  if (first_pair) os << "abelian";
  return os.str();
}

std::string Violation::str() const {
  std::ostringstream os;
  os << (kind == Kind::Antisymmetry ? "antisymmetry" : "jacobi") << " at (";
  for (std::size_t i = 0; i < where.size(); ++i) os << (i ? "," : "") << where[i];
  os << "): " << value;
  return os.str();
}

std::vector<Violation> validate(const StructureTensor& t) {
  std::vector<Violation> out;
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s = t(i, j, k) + t(j, i, k);
        if (!s.is_zero()) out.push_back({Violation::Kind::Antisymmetry, {i + 1, j + 1, k + 1}, s});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar s = Scalar::zero(t.field());
          for (std::size_t m = 0; m < n; ++m) {
            s += t(i, j, m) * t(m, k, l);
            s += t(k, i, m) * t(m, j, l);
            s += t(j, k, m) * t(m, i, l);
          }
          if (!s.is_zero()) out.push_back({Violation::Kind::Jacobi, {i + 1, j + 1, k + 1, l + 1}, s});
        }
  return out;
}

StructureTensor change_basis(const StructureTensor& t, const Matrix& u) {
  const std::size_t n = t.dim();
  if (u.rows() != n || u.cols() != n) throw DimensionMismatch("basis change matrix size");
  Matrix uf = u.in(t.field());
  Matrix uinv = uf.inverse();
  // partial[k](i', j') = sum_{i,j} u(i,i') u(j,j') c(i,j,k)
  std::vector<Matrix> partial(n, Matrix(n, n, t.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = t(i, j, k);
        if (c.is_zero()) continue;
        for (std::size_t ip = 0; ip < n; ++ip) {
          if (uf(i, ip).is_zero()) continue;
          Scalar ci = c * uf(i, ip);
          for (std::size_t jp = 0; jp < n; ++jp)
            if (!uf(j, jp).is_zero()) partial[k](ip, jp) += ci * uf(j, jp);
        }
      }
  StructureTensor out(n, t.field());
  for (std::size_t kp = 0; kp < n; ++kp)
    for (std::size_t k = 0; k < n; ++k) {
      if (uinv(kp, k).is_zero()) continue;
      for (std::size_t ip = 0; ip < n; ++ip)
        for (std::size_t jp = 0; jp < n; ++jp)
          if (!partial[k](ip, jp).is_zero()) out(ip, jp, kp) += uinv(kp, k) * partial[k](ip, jp);
    }
  return out;
}

namespace {

using Vec = std::vector<Scalar>;

std::vector<Vec> rows_of(const Matrix& m) {
  std::vector<Vec> out(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

Matrix bracket_space(const StructureTensor& t, const Matrix& a, const Matrix& b) {
  std::vector<Vec> gens;
  auto ra = rows_of(a), rb = rows_of(b);
  for (const auto& x : ra)
    for (const auto& y : rb) gens.push_back(t.bracket(x, y));
  return row_space(gens, t.dim(), t.field());
}

std::vector<std::size_t> series(const StructureTensor& t, bool derived) {
  Matrix whole = Matrix::identity(t.dim(), t.field());
  Matrix current = whole;
  std::vector<std::size_t> dims{t.dim()};
  while (current.rows() > 0) {
    Matrix next = bracket_space(t, derived ? current : whole, current);
    if (next.rows() == current.rows()) break;
    dims.push_back(next.rows());
    current = next;
  }
  return dims;
}

std::size_t derivation_dim(const StructureTensor& t) {
  // D(e_j) = sum_k D(k, j) e_k; unknown D(k, j) sits at column k * n + j.
  const std::size_t n = t.dim();
  Matrix sys(n * n * n, n * n, t.field());
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t m = 0; m < n; ++m) {
          sys(row, k * n + m) += t(i, j, m);
          sys(row, m * n + i) -= t(m, j, k);
          sys(row, m * n + j) -= t(i, m, k);
        }
  return n * n - sys.rank();
}

// Coefficients c_1..c_m of det(x - A) = x^m + c_1 x^(m-1) + ... + c_m.
std::vector<Scalar> char_poly(const Matrix& a) {
  const std::size_t m = a.rows();
  const Field f = a.field();
  std::vector<Scalar> c;
  Matrix mk(m, m, f);
  Scalar prev = Scalar::one(f);
  for (std::size_t k = 1; k <= m; ++k) {
    mk = a * mk + Matrix::identity(m, f).scaled(prev);
    Matrix am = a * mk;
    Scalar tr = Scalar::zero(f);
    for (std::size_t d = 0; d < m; ++d) tr += am(d, d);
    prev = -tr / Scalar(static_cast<long>(k), f);
    c.push_back(prev);
  }
  return c;
}

Scalar power(const Scalar& s, std::size_t e) {
  Scalar r = Scalar::one(s.field());
  for (std::size_t i = 0; i < e; ++i) r = r * s;
  return r;
}

void derived_action(const StructureTensor& t, Fingerprint& fp) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  Matrix whole = Matrix::identity(n, f);
  Matrix k = bracket_space(t, whole, whole);
  const std::size_t m = k.rows();
  if (m == 0) return;
  std::vector<std::size_t> pivot(m);
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t c = 0;
    while (k(r, c).is_zero()) ++c;
    pivot[r] = c;
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> ei(n, Scalar::zero(f));
    ei[i] = Scalar::one(f);
    Matrix rho(m, m, f);
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<Scalar> kc(n);
      for (std::size_t d = 0; d < n; ++d) kc[d] = k(c, d);
      auto img = t.bracket(ei, kc);
      for (std::size_t r = 0; r < m; ++r) rho(r, c) = img[pivot[r]];
    }
    action.push_back(rho);
  }
  std::vector<std::vector<Scalar>> flat;
  for (const auto& a : action) {
    std::vector<Scalar> v;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) v.push_back(a(r, c));
    flat.push_back(v);
  }
  fp.action_dim = row_space(flat, m * m, f).rows();

  // X with A X = X A for every A in the action; X(r, c) at column r * m + c.
  Matrix comm(n * m * m, m * m, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t s = 0; s < m; ++s) {
          std::size_t row = (i * m + r) * m + c;
          comm(row, s * m + c) += action[i](r, s);
          comm(row, r * m + s) -= action[i](s, c);
        }
  fp.action_commutant = m * m - comm.rank();

  if (fp.action_dim != 1) return;
  const Matrix* gen = nullptr;
  for (const auto& a : action)
    if (!a.is_zero()) {
      gen = &a;
      break;
    }
  auto c = char_poly(*gen);
  std::size_t k0 = 0;
  while (k0 < m && c[k0].is_zero()) ++k0;
  if (k0 == m) return;
  for (std::size_t j = 0; j < m; ++j) fp.action_spectrum.push_back(power(c[j], k0 + 1) / power(c[k0], j + 1));
}

std::pair<std::size_t, std::size_t> inertia(Matrix k) {
  const std::size_t n = k.rows();
  std::size_t pos = 0, neg = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = step;
    while (p < n && k(p, p).is_zero()) ++p;
    if (p == n) {
      // No diagonal pivot left: fold an off-diagonal entry onto the diagonal
      // by the congruence row_i += row_j, col_i += col_j.
      bool found = false;
      for (std::size_t i = step; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (!k(i, j).is_zero()) {
            for (std::size_t c = 0; c < n; ++c) k(i, c) += k(j, c);
            for (std::size_t r = 0; r < n; ++r) k(r, i) += k(r, j);
            p = i;
            found = true;
          }
      if (!found) break;
    }
    if (p != step) {
      for (std::size_t c = 0; c < n; ++c) std::swap(k(p, c), k(step, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(k(r, p), k(r, step));
    }
    const Scalar pivot = k(step, step);
    (sgn(pivot.re()) > 0 ? pos : neg) += 1;
    Scalar inv = pivot.inverse();
    for (std::size_t r = step + 1; r < n; ++r) {
      if (k(r, step).is_zero()) continue;
      Scalar f = k(r, step) * inv;
      for (std::size_t c = step; c < n; ++c) k(r, c) -= f * k(step, c);
    }
    for (std::size_t c = step + 1; c < n; ++c) k(step, c) = Scalar::zero(k.field());
    for (std::size_t r = step + 1; r < n; ++r) k(r, step) = Scalar::zero(k.field());
  }
  return {pos, neg};
}

}  // namespace

std::string Fingerprint::str() const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::size_t>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  os << "dim=" << dim << " derived=";
  list(derived_series);
  os << " lcs=";
  list(lower_central);
  os << " center=" << center << " killing_rank=" << killing_rank;
  if (killing_inertia)
    os << " inertia=(" << killing_inertia->first << "," << killing_inertia->second << ")";
  os << " unimodular=" << (unimodular ? "yes" : "no");
  os << " der=" << derivations << " action=(" << action_dim << "," << action_commutant;
  for (const auto& c : action_spectrum) os << "," << c.str();
  os << ")";
  return os.str();
}

Fingerprint fingerprint(const StructureTensor& t) {
  const std::size_t n = t.dim();
  Fingerprint fp;
  fp.dim = n;
  fp.derived_series = series(t, true);
  fp.lower_central = series(t, false);

  // center = {x : c(i,j,k) x_i = 0 for all j, k}
  Matrix centre_sys(n * n, n, t.field());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centre_sys(j * n + k, i) = t(i, j, k);
  fp.center = n - centre_sys.rank();

  Matrix killing(n, n, t.field());
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(t.ad(i));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Matrix prod = ads[a] * ads[b];
      Scalar tr = Scalar::zero(t.field());
      for (std::size_t d = 0; d < n; ++d) tr += prod(d, d);
      killing(a, b) = tr;
      killing(b, a) = tr;
    }
  fp.killing_rank = killing.rank();
  if (t.field() == Field::Rational) fp.killing_inertia = inertia(killing);

  fp.unimodular = true;
  for (std::size_t i = 0; i < n && fp.unimodular; ++i) {
    Scalar tr = Scalar::zero(t.field());
    for (std::size_t c = 0; c < n; ++c) tr += t(i, c, c);
    fp.unimodular = tr.is_zero();
  }
  fp.derivations = derivation_dim(t);
  derived_action(t, fp);
  return fp;
}

// ---------------------------------------------------------------- catalog

namespace {

struct Spec {
  std::string name;
  Field field;
  std::size_t dim;
  std::vector<std::tuple<int, int, int, long>> brackets;  // 1-based i<j, k, c
  std::string source;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> table = [] {
    using F = Field;
    const std::vector<std::tuple<int, int, int, long>> two_a21{{1, 2, 1, 1}, {3, 4, 3, 1}};
    const std::vector<std::tuple<int, int, int, long>> a1_a32{{2, 4, 2, 1}, {3, 4, 2, 1}, {3, 4, 3, 1}};
    const std::vector<std::tuple<int, int, int, long>> a41{{2, 4, 1, 1}, {3, 4, 2, 1}};
    const std::vector<std::tuple<int, int, int, long>> a410{
        {1, 3, 1, 1}, {2, 3, 2, 1}, {1, 4, 2, -1}, {2, 4, 1, 1}};
    const std::vector<std::tuple<int, int, int, long>> so3{{1, 2, 3, 1}, {2, 3, 1, 1}, {1, 3, 2, -1}};
    const std::vector<std::tuple<int, int, int, long>> sl2{{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}};
    const std::vector<std::tuple<int, int, int, long>> heis{{1, 2, 3, 1}};
    const char* real4 = "four-dimensional real classification, canonical basis";
    const char* complexified = "complex four-dimensional classification, canonical basis";
    const char* standard = "standard convention";
    return std::vector<Spec>{
        {"2A2.1", F::Rational, 4, two_a21, real4},
        {"A1+A3.2", F::Rational, 4, a1_a32, real4},
        {"A4.1", F::Rational, 4, a41, real4},
        {"A4.10", F::Rational, 4, a410, real4},
        {"so3+A1", F::Rational, 4, so3, "so(3) with [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2; central e4"},
        {"heisenberg3+A1", F::Rational, 4, heis, "Heisenberg [e1,e2]=e3; central e4"},
        {"abelian4", F::Rational, 4, {}, standard},
        {"2g2.1", F::Gaussian, 4, two_a21, "complexification of 2A2.1, isomorphic to that of A4.10"},
        {"g1+g3.2", F::Gaussian, 4, a1_a32, complexified},
        {"g4.1", F::Gaussian, 4, a41, complexified},
        {"sl2+g1", F::Gaussian, 4, sl2, "sl(2) with [h,e]=2e, [h,f]=-2f, [e,f]=h; central e4"},
        {"so3", F::Rational, 3, so3, "[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2"},
        {"sl2", F::Rational, 3, sl2, "[h,e]=2e, [h,f]=-2f, [e,f]=h"},
        {"heisenberg3", F::Rational, 3, heis, "[e1,e2]=e3"},
        {"abelian3", F::Rational, 3, {}, standard},
    };
  }();
  return table;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> table{
      {"g4.10", "2g2.1"},  {"A1+A3.2c", "g1+g3.2"}, {"so3+g1", "sl2+g1"},
      {"heisenberg4", "heisenberg3+A1"}, {"2A21", "2A2.1"}, {"2g21", "2g2.1"},
  };
  return table;
}

const Spec& find_spec(const std::string& name) {
  std::string resolved = catalog_resolve(name);
  for (const auto& s : specs())
    if (s.name == resolved) return s;
  throw UnknownName(name);
}

CatalogEntry build(const Spec& s, Field f) {
  StructureTensor t(s.dim, f);
  for (const auto& [i, j, k, c] : s.brackets) t.set_bracket(i - 1, j - 1, k - 1, Scalar(c, f));
  return {s.name, t, s.source};
}

}  // namespace

std::string catalog_resolve(const std::string& name) {
  auto it = aliases().find(name);
  std::string resolved = it == aliases().end() ? name : it->second;
  for (const auto& s : specs())
    if (s.name == resolved) return resolved;
  throw UnknownName(name);
}

CatalogEntry catalog_get(const std::string& name) {
  const Spec& s = find_spec(name);
  return build(s, s.field);
}

CatalogEntry catalog_get(const std::string& name, Field f) { return build(find_spec(name), f); }

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& s : specs()) out.push_back(s.name);
  return out;
}

std::vector<std::string> catalog_names(Field f, std::size_t dim) {
  // The complex list reuses the field-agnostic real entries that have no
  // dedicated complex counterpart.
  static const std::vector<std::string> complex4{"2g2.1", "g1+g3.2", "g4.1", "sl2+g1", "heisenberg3+A1",
                                                 "abelian4"};
  static const std::vector<std::string> complex3{"sl2", "heisenberg3", "abelian3"};
  std::vector<std::string> out;
  if (f == Field::Gaussian) {
    if (dim == 4) return complex4;
    if (dim == 3) return complex3;
    return out;
  }
  for (const auto& s : specs())
    if (s.field == Field::Rational && s.dim == dim) out.push_back(s.name);
  return out;
}

namespace {

// Fingerprints of every entry in both fields, computed once.
const Fingerprint* catalog_fingerprint(const std::string& name, Field f) {
  static const std::map<std::pair<std::string, Field>, Fingerprint> cache = [] {
    std::map<std::pair<std::string, Field>, Fingerprint> m;
    for (const auto& s : specs())
      for (Field g : {Field::Rational, Field::Gaussian}) m[{s.name, g}] = fingerprint(build(s, g).tensor);
    return m;
  }();
  return &cache.at({name, f});
}

}  // namespace

std::optional<std::string> match_catalog(const StructureTensor& t, const std::vector<std::string>& candidates) {
  std::vector<std::string> names = candidates.empty() ? catalog_names(t.field(), t.dim()) : candidates;
  Fingerprint fp = fingerprint(t);
  std::vector<std::string> hits;
  for (const auto& name : names) {
    std::string resolved = catalog_resolve(name);
    const Fingerprint* efp = catalog_fingerprint(resolved, t.field());
    if (efp->dim != t.dim()) continue;
    if (*efp == fp &&
        std::find(hits.begin(), hits.end(), resolved) == hits.end())
      hits.push_back(resolved);
  }
  if (hits.empty()) return std::nullopt;
  if (hits.size() > 1) {
    std::string msg = "fingerprint shared by";
    for (const auto& h : hits) msg += " " + h;
    throw Ambiguous(msg);
  }
  return hits.front();
}

}  // namespace iwc
