#include <doctest.h>

#include <random>
#include <set>

#include "iwc/derivations.hpp"

using namespace iwc;

namespace {

Matrix diag_of(const std::vector<long>& a) {
  std::vector<Scalar> d;
  for (long x : a) d.emplace_back(x);
  return Matrix::diagonal(d);
}

std::set<std::pair<std::size_t, std::size_t>> support(const DerivationBasis& d) {
  std::set<std::pair<std::size_t, std::size_t>> s;
  for (const auto& m : d.basis)
    for (std::size_t r = 0; r < d.n; ++r)
      for (std::size_t c = 0; c < d.n; ++c)
        if (!m(r, c).is_zero()) s.insert({r + 1, c + 1});
  return s;
}

std::set<std::vector<int>> normalized_set(const std::vector<Signature>& v) {
  std::set<std::vector<int>> s;
  for (const auto& x : v) s.insert(x.normalized().exponents);
  return s;
}

}  // namespace

TEST_CASE("derivation algebra dimensions") {
  CHECK(derivation_basis(catalog_get("g1+g3.2").tensor).dim() == 6);
  CHECK(derivation_basis(catalog_get("g4.1").tensor).dim() == 7);
  CHECK(derivation_basis(catalog_get("abelian4").tensor).dim() == 16);
  CHECK(derivation_basis(catalog_get("abelian3").tensor).dim() == 9);
  // Semisimple: every derivation is inner.
  CHECK(derivation_basis(catalog_get("so3").tensor).dim() == 3);
  CHECK(derivation_basis(catalog_get("sl2").tensor).dim() == 3);
  // gl(2)-worth of outer maps plus two inner ones on [e1,e2]=e3.
  CHECK(derivation_basis(catalog_get("heisenberg3").tensor).dim() == 6);
}

TEST_CASE("derivation shapes") {
  // g4.1: upper triangular, all ten upper entries used.
  auto d41 = derivation_basis(catalog_get("g4.1").tensor);
  std::set<std::pair<std::size_t, std::size_t>> upper;
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t c = r; c <= 4; ++c) upper.insert({r, c});
  CHECK(support(d41) == upper);
  // diagonal of any derivation is (a + 2b, a + b, a, b)
  for (const auto& m : d41.basis) CHECK(m(0, 0) == m(2, 2) + m(3, 3) + m(3, 3));

  // g1+g3.2: free entries 11, 22, 23, 14, 24, 34 with g33 = g22.
  auto d32 = derivation_basis(catalog_get("g1+g3.2").tensor);
  std::set<std::pair<std::size_t, std::size_t>> expect{{1, 1}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}};
  CHECK(support(d32) == expect);
  for (const auto& m : d32.basis) CHECK(m(1, 1) == m(2, 2));
}

TEST_CASE("is_derivation examples") {
  auto g41 = catalog_get("g4.1").tensor;
  CHECK(is_derivation(g41, diag_of({2, 1, 0, 1})));
  CHECK(!is_derivation(catalog_get("2g2.1").tensor, Matrix::identity(4)));
  for (const auto& name : catalog_names()) {
    auto t = catalog_get(name).tensor;
    CHECK(is_derivation(t, Matrix(t.dim(), t.dim())));
    for (const auto& m : derivation_basis(t).basis) CHECK(is_derivation(t, m));
    // inner derivations
    for (std::size_t i = 0; i < t.dim(); ++i) CHECK(is_derivation(t, t.ad(i)));
  }
}

TEST_CASE("diagonal lattice agrees with the direct derivation check") {
  for (const auto& name : catalog_names()) {
    auto t = catalog_get(name).tensor;
    DiagonalLattice lat(t);
    const std::size_t n = t.dim();
    std::vector<long> a(n, -2);
    std::size_t hits = 0;
    while (true) {
      bool direct = is_derivation(t, diag_of(a));
      // direct rule: alpha_i + alpha_j = alpha_k for every nonzero c_ij^k
      bool rule = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (!t(i, j, k).is_zero() && a[i] + a[j] != a[k]) rule = false;
      CHECK(lat.contains(a) == direct);
      CHECK(rule == direct);
      hits += direct;
      std::size_t p = 0;
      while (p < n && a[p] == 2) a[p++] = -2;
      if (p == n) break;
      ++a[p];
    }
    CHECK(hits >= 1);
    for (const auto& b : lat.basis()) CHECK(is_derivation(t, diag_of(b)));
    for (const auto& b : lat.in_box(3)) CHECK(is_derivation(t, diag_of(b)));
  }
}

TEST_CASE("admissible signatures") {
  auto g41 = catalog_get("g4.1").tensor;
  std::set<std::vector<int>> family;
  for (int al = 0; al <= 4; ++al)
    for (int be = 0; be <= 4; ++be)
      if (al + 2 * be <= 4) family.insert(Signature({al + 2 * be, al + be, al, be}).normalized().exponents);
  CHECK(normalized_set(admissible_signatures(g41, 4)) == family);

  auto g32 = catalog_get("g1+g3.2").tensor;
  std::set<std::vector<int>> beta_alpha;
  for (int al = 0; al <= 3; ++al)
    for (int be = 0; be <= 3; ++be) beta_alpha.insert(Signature({be, al, al, 0}).normalized().exponents);
  CHECK(normalized_set(admissible_signatures(g32, 3)) == beta_alpha);
  CHECK(beta_alpha.size() == 10);

  std::set<std::vector<int>> zero_one;
  for (int k = 0; k <= 4; ++k) {
    std::vector<int> v(4, 0);
    for (int i = 0; i < k; ++i) v[i] = 1;
    zero_one.insert(v);
  }
  CHECK(normalized_set(admissible_signatures(catalog_get("abelian4").tensor, 1)) == zero_one);

  for (const auto& s : admissible_signatures(g41, 4)) {
    std::vector<long> a(s.exponents.begin(), s.exponents.end());
    CHECK(is_derivation(g41, diag_of(a)));
  }
  auto orderings = admissible_orderings(g41, Signature({3, 2, 1, 1}));
  REQUIRE(orderings.size() == 1);
  CHECK(orderings[0] == Signature({3, 2, 1, 1}));
}

TEST_CASE("dim Der is a basis invariant") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> d(-2, 2);
  for (const auto& name : catalog_names()) {
    auto t = catalog_get(name).tensor;
    const auto dim = derivation_basis(t).dim();
    for (int trial = 0; trial < 3; ++trial) {
      Matrix u(t.dim(), t.dim());
      do {
        for (std::size_t r = 0; r < t.dim(); ++r)
          for (std::size_t c = 0; c < t.dim(); ++c) u(r, c) = Scalar(d(rng));
      } while (u.determinant().is_zero());
      CHECK(derivation_basis(change_basis(t, u)).dim() == dim);
    }
  }
}
