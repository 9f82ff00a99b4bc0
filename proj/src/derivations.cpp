#include "iwc/derivations.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace iwc {

namespace {

// Row (i, j, k) of the derivation system, unknown gamma^a_b at a * n + b:
//   sum_k' c_ij^k' g^k_k' - sum_i' c_i'j^k g^i'_i - sum_j' c_ij'^k g^j'_j = 0
Matrix derivation_system(const StructureTensor& t) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  Matrix m(n * (n - 1) / 2 * n, n * n, f);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t p = 0; p < n; ++p) {
          if (!t(i, j, p).is_zero()) m(row, k * n + p) += t(i, j, p);
          if (!t(p, j, k).is_zero()) m(row, p * n + i) -= t(p, j, k);
          if (!t(i, p, k).is_zero()) m(row, p * n + j) -= t(i, p, k);
        }
      }
  return m;
}

long gcd_of(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  return g;
}

}  // namespace

DerivationBasis derivation_basis(const StructureTensor& t) {
  const std::size_t n = t.dim();
  DerivationBasis out;
  out.n = n;
  if (n < 2) {
    for (std::size_t a = 0; a < n * n; ++a) {
      Matrix g(n, n, t.field());
      g(a / n, a % n) = Scalar::one(t.field());
      out.basis.push_back(g);
    }
    return out;
  }
  for (const auto& v : derivation_system(t).nullspace()) {
    Matrix g(n, n, t.field());
    for (std::size_t a = 0; a < n * n; ++a) g(a / n, a % n) = v[a];
    out.basis.push_back(std::move(g));
  }
  return out;
}

bool is_derivation(const StructureTensor& t, const Matrix& gamma) {
  const std::size_t n = t.dim();
  if (gamma.rows() != n || gamma.cols() != n) throw DimensionMismatch("derivation matrix size");
  const Matrix g = gamma.in(t.field());
  auto column = [&](std::size_t j) {
    std::vector<Scalar> v(n, Scalar::zero(t.field()));
    for (std::size_t r = 0; r < n; ++r) v[r] = g(r, j);
    return v;
  };
  auto apply = [&](const std::vector<Scalar>& x) {
    std::vector<Scalar> y(n, Scalar::zero(t.field()));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!x[c].is_zero() && !g(r, c).is_zero()) y[r] += g(r, c) * x[c];
    return y;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Scalar> ei(n, Scalar::zero(t.field())), ej = ei;
      ei[i] = Scalar::one(t.field());
      ej[j] = Scalar::one(t.field());
      auto lhs = apply(t.bracket(ei, ej));
      auto r1 = t.bracket(column(i), ej);
      auto r2 = t.bracket(ei, column(j));
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != r1[k] + r2[k]) return false;
    }
  return true;
}

DiagonalLattice::DiagonalLattice(const StructureTensor& t) : n_(t.dim()) {
  std::set<std::vector<long>> rows;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!t(i, j, k).is_zero()) {
          std::vector<long> r(n_, 0);
          r[i] += 1;
          r[j] += 1;
          r[k] -= 1;
          rows.insert(r);
        }
  constraints_.assign(rows.begin(), rows.end());

  // Unimodular column reduction M V = [H | 0]; the trailing columns of V are
  // a Z-basis of ker M.
  std::vector<std::vector<long>> m = constraints_;
  std::vector<std::vector<long>> v(n_, std::vector<long>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i) v[i][i] = 1;
  auto col_axpy = [&](std::size_t dst, std::size_t src, long q) {  // col dst -= q col src
    for (auto& r : m) r[dst] -= q * r[src];
    for (auto& r : v) r[dst] -= q * r[src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& r : m) std::swap(r[a], r[b]);
    for (auto& r : v) std::swap(r[a], r[b]);
  };
  std::size_t p = 0;
  for (std::size_t r = 0; r < m.size() && p < n_; ++r) {
    while (true) {
      std::size_t best = n_;
      for (std::size_t c = p; c < n_; ++c)
        if (m[r][c] != 0 && (best == n_ || std::labs(m[r][c]) < std::labs(m[r][best]))) best = c;
      if (best == n_) break;
      col_swap(p, best);
      bool done = true;
      for (std::size_t c = p + 1; c < n_; ++c)
        if (m[r][c] != 0) {
          col_axpy(c, p, m[r][c] / m[r][p]);
          if (m[r][c] != 0) done = false;
        }
      if (done) {
        ++p;
        break;
      }
    }
  }
  for (std::size_t c = p; c < n_; ++c) {
    std::vector<long> b(n_);
    for (std::size_t i = 0; i < n_; ++i) b[i] = v[i][c];
    // Orient so the first nonzero entry is positive.
    auto nz = std::find_if(b.begin(), b.end(), [](long x) { return x != 0; });
    if (nz != b.end() && *nz < 0)
      for (long& x : b) x = -x;
    basis_.push_back(std::move(b));
  }
}

bool DiagonalLattice::contains(const std::vector<long>& alpha) const {
  if (alpha.size() != n_) return false;
  const std::size_t r = basis_.size();
  // Solve sum_k x_k basis_k = alpha over Q, then require integral x.
  Matrix aug(n_, r + 1);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < r; ++k) aug(i, k) = Scalar(basis_[k][i]);
    aug(i, r) = Scalar(alpha[i]);
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == r) return false;
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    const Scalar& x = aug(row, r);
    if (x.re().get_den() != 1) return false;
  }
  return true;
}

std::vector<std::vector<long>> DiagonalLattice::in_box(long max_exp) const {
  std::vector<std::vector<long>> out;
  if (max_exp < 0) return out;
  Matrix m(std::max<std::size_t>(constraints_.size(), 1), n_);
  for (std::size_t r = 0; r < constraints_.size(); ++r)
    for (std::size_t c = 0; c < n_; ++c) m(r, c) = Scalar(constraints_[r][c]);
  auto pivots = m.rref();
  std::vector<bool> is_pivot(n_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n_; ++c)
    if (!is_pivot[c]) free.push_back(c);

  std::vector<long> fv(free.size(), 0);
  while (true) {
    std::vector<long> alpha(n_, 0);
    for (std::size_t f = 0; f < free.size(); ++f) alpha[free[f]] = fv[f];
    bool ok = true;
    for (std::size_t row = 0; row < pivots.size() && ok; ++row) {
      mpq_class x = 0;
      for (std::size_t f = 0; f < free.size(); ++f) x -= m(row, free[f]).re() * fv[f];
      if (x.get_den() != 1 || x < 0 || x > max_exp) ok = false;
      else alpha[pivots[row]] = x.get_num().get_si();
    }
    if (ok) out.push_back(alpha);
    std::size_t f = 0;
    while (f < fv.size() && fv[f] == max_exp) fv[f++] = 0;
    if (f == fv.size()) break;
    ++fv[f];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Signature> admissible_signatures(const StructureTensor& t, long max_exp) {
  DiagonalLattice lat(t);
  std::map<std::vector<int>, std::vector<int>> reps;
  for (const auto& a : lat.in_box(max_exp)) {
    Signature s(std::vector<int>(a.begin(), a.end()));
    auto key = s.normalized().exponents;
    if (gcd_of(a) > 1) continue;
    reps.try_emplace(key, s.exponents);
  }
  std::vector<Signature> out;
  for (auto& [key, raw] : reps) out.emplace_back(raw);
  std::sort(out.begin(), out.end(), SignatureOrder{});
  return out;
}

std::vector<Signature> admissible_orderings(const StructureTensor& t, const Signature& sig) {
  DiagonalLattice lat(t);
  const auto key = sig.normalized();
  long max_exp = 0;
  for (int x : key.exponents) max_exp = std::max<long>(max_exp, x);
  std::vector<Signature> out;
  for (const auto& a : lat.in_box(max_exp)) {
    Signature s(std::vector<int>(a.begin(), a.end()));
    if (gcd_of(a) <= 1 && s.normalized() == key) out.push_back(s);
  }
  return out;
}

}  // namespace iwc
