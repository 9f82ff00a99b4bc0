#include <doctest.h>

#include "iwc/search.hpp"

using namespace iwc;

namespace {

std::vector<Signature> sigs(std::initializer_list<std::vector<int>> l) {
  std::vector<Signature> out;
  for (const auto& e : l) out.emplace_back(e);
  return out;
}

bool realizes(const char* source, const char* target, const Matrix& a, const Signature& s) {
  return verify_iw(catalog_get(source).tensor, IWSpec{a, s, std::nullopt}, target).success();
}

}  // namespace

TEST_CASE("signature enumeration") {
  CHECK(enumerate_signatures(4, 1) == sigs({{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}}));
  auto four = enumerate_signatures(4, 3);
  auto at = std::find(four.begin(), four.end(), Signature({3, 2, 1, 1}));
  REQUIRE(at != four.end());
  for (auto it = four.begin(); it != four.end(); ++it) {
    bool small = *std::max_element(it->exponents.begin(), it->exponents.end()) <= 2;
    if (small) CHECK(it < at);
    CHECK(it->is_normalized());
  }
  CHECK(std::is_sorted(four.begin(), four.end(), SignatureOrder{}));
  CHECK(std::adjacent_find(four.begin(), four.end()) == four.end());
  // (2,2,0,0) normalizes to (1,1,0,0) and is not listed twice.
  CHECK(std::find(four.begin(), four.end(), Signature({2, 2, 0, 0})) == four.end());
  auto three = enumerate_signatures(3, 2);
  CHECK(std::find(three.begin(), three.end(), Signature({2, 1, 1})) != three.end());
  CHECK(std::find(three.begin(), three.end(), Signature({1, 1, 0})) != three.end());
}

TEST_CASE("candidate sequence") {
  auto fixed = structured_candidates(4, Field::Rational);
  CHECK(fixed.size() == 24);
  CHECK(fixed[0] == Matrix::identity(4));
  for (std::size_t k = 0; k < 20; ++k) {
    CHECK(random_candidate(4, Field::Rational, 7, k) == random_candidate(4, Field::Rational, 7, k));
    CHECK(random_candidate(4, Field::Rational, 7, k) != random_candidate(4, Field::Rational, 8, k));
  }
}

TEST_CASE("known matrices realize their contractions") {
  const Matrix known = Matrix::from_rows({{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}}, Field::Gaussian);
  CHECK(realizes("2g2.1", "g4.1", known, Signature({3, 2, 1, 1})));
  CHECK(realizes("2g2.1", "g4.1", known, Signature({4, 3, 2, 1})));
  CHECK(!realizes("2g2.1", "g4.1", known, Signature({2, 1, 0, 1})));

  const Matrix hand = Matrix::from_rows({{0, 0, 0, 1}, {-1, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}});
  CHECK(realizes("so3+A1", "A4.1", hand, Signature({3, 2, 1, 1})));
  CHECK(!realizes("so3+A1", "A4.1", Matrix::identity(4), Signature({3, 2, 1, 1})));
}

TEST_CASE("find_matrix") {
  auto so3 = catalog_get("so3").tensor;
  for (const Signature& s : sigs({{1, 1, 2}, {2, 1, 1}})) {
    auto r = find_matrix(so3, "heisenberg3", s);
    REQUIRE(r.witness);
    CHECK(r.phase == "structured");
    CHECK(*r.witness == Matrix::identity(3));
  }

  SearchOptions o;
  o.restarts = 2000;
  auto src = catalog_get("2g2.1").tensor;
  auto par = find_matrix(src, "g4.1", Signature({3, 2, 1, 1}), o);
  REQUIRE(par.witness);
  CHECK(realizes("2g2.1", "g4.1", *par.witness, Signature({3, 2, 1, 1})));
  o.parallel = false;
  auto ser = find_matrix(src, "g4.1", Signature({3, 2, 1, 1}), o);
  CHECK(ser.index == par.index);
  CHECK(ser.phase == par.phase);

  o.restarts = 300;
  auto none = find_matrix(src, "g1+g3.2", Signature({1, 2, 2, 0}), o);
  CHECK(!none.witness);
  CHECK(none.restarts_used == 300);
  CHECK_THROWS_AS(find_matrix(src, "g4.1", Signature({1, 1, 0}), o), DimensionMismatch);
}

TEST_CASE("scan reports are reproducible and checkable") {
  ScanOptions o;
  o.groebner.max_pair_reductions = 20000;
  auto par = minimality_scan("so3", "heisenberg3", 2, o);
  o.search.parallel = false;
  auto ser = minimality_scan("so3", "heisenberg3", 2, o);
  CHECK(par.to_json().dump() == ser.to_json().dump());
  REQUIRE(par.minimal);
  CHECK(*par.minimal == Signature({2, 1, 1}));
  CHECK(par.simple_fact_known);
  CHECK(par.simple_fact_confirmed);
  CHECK(check_scan_report(par, o));

  auto feasible = std::find_if(par.entries.begin(), par.entries.end(),
                               [](const ScanEntry& e) { return e.status == ScanStatus::Feasible; });
  REQUIRE(feasible != par.entries.end());
  ScanReport bad = par;
  bad.entries[feasible - par.entries.begin()].witness = Matrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(!check_scan_report(bad, o));

  auto refuted = std::find_if(par.entries.begin(), par.entries.end(),
                              [](const ScanEntry& e) { return !e.certificates.empty(); });
  REQUIRE(refuted != par.entries.end());
  bad = par;
  bad.entries[refuted - par.entries.begin()].certificates[0] = Inconclusive{"forged", 0};
  CHECK(!check_scan_report(bad, o));
  bad = par;
  bad.entries.pop_back();
  CHECK(!check_scan_report(bad, o));
}

TEST_CASE("2g2.1 has no contraction to g4.1 below (3,2,1,1)") {
  ScanOptions o;
  o.field = Field::Gaussian;
  o.groebner.max_pair_reductions = 20000;
  auto r = minimality_scan("2g2.1", "g4.1", 2, o);
  CHECK(!r.minimal);
  CHECK(r.simple_fact_confirmed);
  for (const auto& e : r.entries) CHECK(e.status != ScanStatus::Inconclusive);
  CHECK(check_scan_report(r, o));
}
