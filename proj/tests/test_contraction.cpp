#include <doctest.h>

#include <random>

#include "iwc/contraction.hpp"

using namespace iwc;

namespace {

const Matrix kA = Matrix::from_rows({{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}});

bool rule_diverges(const StructureTensor& t, const Signature& s) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k)
        if (!t(i, j, k).is_zero() && s[i] + s[j] < s[k]) return true;
  return false;
}

}  // namespace

TEST_CASE("diagonal limits") {
  auto r = iw_limit_diagonal(catalog_get("so3").tensor, Signature({1, 1, 2}));
  REQUIRE(has_limit(r));
  auto& c = std::get<ContractionResult>(r);
  CHECK(c.tensor == catalog_get("heisenberg3").tensor);
  CHECK(c.matched == "heisenberg3");
  CHECK(c.classification == Classification::Proper);

  for (const auto& name : catalog_names()) {
    auto t = catalog_get(name).tensor;
    auto z = iw_limit_diagonal(t, Signature(std::vector<int>(t.dim(), 0)));
    REQUIRE(has_limit(z));
    CHECK(std::get<ContractionResult>(z).tensor == t);
    if (!t.is_abelian()) CHECK(std::get<ContractionResult>(z).classification == Classification::Improper);
  }

  auto two = catalog_get("2g2.1").tensor;
  auto same = iw_limit_diagonal(two, Signature({1, 0, 1, 0}));
  CHECK(std::get<ContractionResult>(same).tensor == two);
  CHECK(std::get<ContractionResult>(same).classification == Classification::Improper);

  auto div = iw_limit_diagonal(catalog_get("heisenberg3").tensor, Signature({0, 0, 1}));
  REQUIRE(!has_limit(div));
  CHECK(std::get<NoLimit>(div).k == 3);
}

TEST_CASE("general eps-matrix limits") {
  auto two = catalog_get("2g2.1").tensor;
  auto u = EpsMatrix::from_constant(kA.in(Field::Gaussian)) * EpsMatrix::diag_powers({3, 2, 1, 1}, Field::Gaussian);
  auto r = contract_with_matrix(two, u);
  REQUIRE(has_limit(r));
  CHECK(std::get<ContractionResult>(r).tensor == catalog_get("g4.1").tensor);
  CHECK(std::get<ContractionResult>(r).matched == "g4.1");

  auto h = catalog_get("heisenberg3").tensor;
  auto nl = contract_with_matrix(h, EpsMatrix::diag_powers({-1, 0, 0}));
  REQUIRE(!has_limit(nl));
  CHECK(std::get<NoLimit>(nl).order == -1);

  for (const auto& name : catalog_names()) {
    auto t = catalog_get(name).tensor;
    auto same = contract_with_matrix(t, EpsMatrix::identity(t.dim(), t.field()));
    CHECK(std::get<ContractionResult>(same).tensor == t);
  }
}

TEST_CASE("verify_iw") {
  auto two = catalog_get("2g2.1").tensor;
  auto rep = verify_iw(two, IWSpec{kA, Signature({3, 2, 1, 1}), std::nullopt}, "g4.1", "2g2.1");
  CHECK(rep.success());
  CHECK(rep.result->tensor == catalog_get("g4.1").tensor);
  CHECK(verify_iw(two, IWSpec{kA, Signature({4, 3, 2, 1}), std::nullopt}, "g4.1").success());
  auto bad = verify_iw(two, IWSpec{Matrix::identity(4), Signature({1, 1, 1, 0}), std::nullopt}, "g4.1");
  CHECK(bad.status != VerifyStatus::Success);
  CHECK_THROWS_AS(verify_iw(two, IWSpec{Matrix(4, 4), Signature({1, 1, 1, 0}), std::nullopt}, "g4.1"), Singular);
  auto j = rep.to_json();
  CHECK(j["status"] == "success");
  CHECK(j["signature"]["normalized"] == json::array({3, 2, 1, 1}));
}

TEST_CASE("gauge covariance under target scalings") {
  // diag(s^2 t, s t, t, s) acts on g4.1 by automorphisms; with P = M0 the
  // contraction lands on the same algebra.
  auto two = catalog_get("2g2.1").tensor;
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> d(1, 3), sign(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    long s = d(rng) * (sign(rng) ? 1 : -1), t = d(rng);
    auto m0 = Matrix::diagonal({Scalar(s * s * t), Scalar(s * t), Scalar(t), Scalar(s)});
    CHECK(change_basis(catalog_get("g4.1").tensor, m0) == catalog_get("g4.1").tensor);
    auto rep = verify_iw(two, IWSpec{kA, Signature({3, 2, 1, 1}), m0}, "g4.1");
    CHECK(rep.success());
  }
}

TEST_CASE("fast diagonal path agrees with the general path") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> e(0, 4);
  for (const auto& name : catalog_names()) {
    auto t = catalog_get(name).tensor;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> a(t.dim());
      for (auto& x : a) x = e(rng);
      Signature sig(a);
      auto fast = iw_limit_diagonal(t, sig);
      auto slow = limit_tensor(t, EpsMatrix::diag_powers(a, t.field()));
      CHECK(has_limit(fast) == std::holds_alternative<StructureTensor>(slow));
      CHECK(has_limit(fast) == !rule_diverges(t, sig));
      if (!has_limit(fast)) continue;
      const auto& ft = std::get<ContractionResult>(fast).tensor;
      CHECK(ft == std::get<StructureTensor>(slow));
      CHECK(validate(ft).empty());
      for (int k = 2; k <= 3; ++k) {
        auto scaled = iw_limit_diagonal(t, sig.scaled(k));
        REQUIRE(has_limit(scaled));
        CHECK(std::get<ContractionResult>(scaled).tensor == ft);
      }
    }
  }
}
