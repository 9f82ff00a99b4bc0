#include "iwc/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "iwc/derivations.hpp"
#include "iwc/errors.hpp"
#include "iwc/iw_system.hpp"

namespace iwc {

std::vector<Signature> enumerate_signatures(std::size_t n, int max_exp) {
  std::set<Signature, SignatureOrder> seen;
  std::vector<int> cur(n, 0);
  // Non-increasing tuples only; normalization handles the rest.
  auto rec = [&](auto&& self, std::size_t pos, int cap) -> void {
    if (pos == n) {
      seen.insert(Signature(cur).normalized());
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, max_exp);
  return {seen.begin(), seen.end()};
}

std::vector<Matrix> structured_candidates(std::size_t n, Field f) {
  std::vector<Matrix> out{Matrix::identity(n, f)};
  if (n > 6) return out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    Matrix m(n, n, f);
    for (std::size_t c = 0; c < n; ++c) m(perm[c], c) = Scalar::one(f);
    out.push_back(std::move(m));
  }
  return out;
}

Matrix random_candidate(std::size_t n, Field f, std::uint64_t seed, std::size_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(std::uint64_t(k) >> 32)};
  std::mt19937_64 rng(seq);
  Matrix m(n, n, f);
  const bool sparse = k % 2 == 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::uint64_t x = rng();
      if (sparse) {
        if (x % 10 < 3) m(r, c) = Scalar((x >> 8) % 2 ? 1L : -1L, f);
      } else {
        long num = static_cast<long>(x % 5) - 2, den = static_cast<long>((x >> 8) % 2) + 1;
        m(r, c) = Scalar(mpq_class(num, den), f);
      }
    }
  return m;
}

namespace {

bool realizes(const StructureTensor& source, const std::string& target, const Signature& sig, const Matrix& a) {
  if (a.determinant().is_zero()) return false;
  return verify_iw(source, IWSpec{a, sig, std::nullopt}, target).success();
}

constexpr std::size_t kChunk = 64;

}  // namespace

FindResult find_matrix(const StructureTensor& source, const std::string& target, const Signature& sig,
                       const SearchOptions& opts) {
  const std::size_t n = source.dim();
  if (sig.size() != n) throw DimensionMismatch("signature length differs from the algebra dimension");
  FindResult res;
  auto fixed = structured_candidates(n, source.field());
  for (std::size_t k = 0; k < fixed.size(); ++k)
    if (realizes(source, target, sig, fixed[k])) {
      res.witness = fixed[k];
      res.phase = "structured";
      res.index = k;
      return res;
    }
  for (std::size_t base = 0; base < opts.restarts; base += kChunk) {
    const std::size_t end = std::min(opts.restarts, base + kChunk);
    std::vector<char> hit(end - base, 0);
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (std::size_t k = base; k < end; ++k)
      hit[k - base] = realizes(source, target, sig, random_candidate(n, source.field(), opts.seed, k));
    for (std::size_t k = base; k < end; ++k)
      if (hit[k - base]) {
        Matrix a = random_candidate(n, source.field(), opts.seed, k);
        if (!realizes(source, target, sig, a)) throw std::logic_error("witness failed re-verification");
        res.witness = std::move(a);
        res.phase = "random";
        res.index = k;
        res.restarts_used = k + 1;
        return res;
      }
  }
  res.restarts_used = opts.restarts;
  return res;
}

const char* scan_status_name(ScanStatus s) {
  switch (s) {
    case ScanStatus::NotAdmissible: return "not-derivation-admissible";
    case ScanStatus::Infeasible: return "infeasible";
    case ScanStatus::Feasible: return "feasible";
    default: return "inconclusive";
  }
}

bool simple_iw_excluded(const std::string& source, const std::string& target) {
  const std::string s = catalog_resolve(source), t = catalog_resolve(target);
  return (s == "2g2.1" && t == "g4.1") || (s == "so3+A1" && t == "A4.1") || (s == "so3" && t == "heisenberg3");
}

namespace {

bool real_branch_case(const std::string& source, const std::string& target, const Signature& ordering,
                      const ScanOptions& opts) {
  return opts.real && catalog_resolve(source) == "so3+A1" && catalog_resolve(target) == "A4.1" &&
         ordering == Signature({2, 1, 0, 1});
}

bool is_zero_signature(const Signature& s) {
  return std::all_of(s.exponents.begin(), s.exponents.end(), [](int x) { return x == 0; });
}

std::vector<Signature> admissible_classes(const StructureTensor& target, int max_exp) {
  std::vector<Signature> out;
  for (const auto& s : admissible_signatures(target, max_exp)) out.push_back(s.normalized());
  return out;
}

// Real certificates only count when the ground field stands for R.
bool accepted(const Certificate& c, Field f) {
  return std::holds_alternative<ComplexInfeasible>(c) || (f == Field::Rational && refutes(c));
}

bool contains(const std::vector<Signature>& v, const Signature& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

void scan_one(ScanEntry& e, const std::string& source, const std::string& target, const StructureTensor& src,
              const StructureTensor& tgt, const ScanOptions& opts) {
  if (is_zero_signature(e.signature) && !(fingerprint(src) == fingerprint(tgt))) {
    e.status = ScanStatus::Infeasible;
    e.fingerprint_refutation = true;
    e.note = "constant basis change: the limit is the source itself";
    return;
  }
  SearchOptions so = opts.search;
  so.parallel = false;
  FindResult f = find_matrix(src, target, e.signature, so);
  if (f.witness) {
    e.status = ScanStatus::Feasible;
    e.witness = f.witness;
    e.note = f.phase + " candidate " + std::to_string(f.index);
    return;
  }
  e.orderings = admissible_orderings(tgt, e.signature);
  bool all = true;
  for (const auto& o : e.orderings) {
    Ideal sys = scan_system(source, target, o, opts);
    Certificate c = real_branch_case(source, target, o, opts) ? certify(sys, CertifyMode::RealBranch, opts.groebner)
                    : opts.field == Field::Rational       ? certify_real(sys, opts.groebner)
                                                          : certify(sys, CertifyMode::Complex, opts.groebner);
    if (!accepted(c, opts.field)) {
      all = false;
      if (e.note.empty()) e.note = o.str() + ": " + std::get<Inconclusive>(c).reason;
    }
    e.certificates.push_back(std::move(c));
  }
  e.status = all ? ScanStatus::Infeasible : ScanStatus::Inconclusive;
}

}  // namespace

Ideal scan_system(const std::string& source, const std::string& target, const Signature& ordering,
                  const ScanOptions& opts) {
  if (real_branch_case(source, target, ordering, opts)) return load_fixture("SO3-2101");
  return generate_iw_system(catalog_get(source, opts.field).tensor, catalog_get(target, opts.field).tensor,
                            ordering, InverseMode::Cofactor);
}

ScanReport minimality_scan(const std::string& source, const std::string& target, int max_exp,
                           const ScanOptions& opts) {
  const StructureTensor src = catalog_get(source, opts.field).tensor, tgt = catalog_get(target, opts.field).tensor;
  if (src.dim() != tgt.dim()) throw DimensionMismatch("source and target dimensions differ");
  ScanReport r;
  r.source = catalog_resolve(source);
  r.target = catalog_resolve(target);
  r.max_exp = max_exp;
  r.real = opts.real;
  r.field = opts.field;
  const auto classes = admissible_classes(tgt, max_exp);
  std::vector<std::size_t> todo;
  for (const auto& s : enumerate_signatures(src.dim(), max_exp)) {
    ScanEntry e;
    e.signature = s;
    if (!contains(classes, s)) {
      e.status = ScanStatus::NotAdmissible;
    } else {
      todo.push_back(r.entries.size());
    }
    r.entries.push_back(std::move(e));
  }
#pragma omp parallel for schedule(dynamic) if (opts.search.parallel)
  for (std::size_t k = 0; k < todo.size(); ++k) scan_one(r.entries[todo[k]], source, target, src, tgt, opts);

  for (const auto& e : r.entries)
    if (e.status == ScanStatus::Feasible) {
      r.minimal = e.signature;
      break;
    }
  r.simple_fact_known = simple_iw_excluded(source, target);
  if (r.simple_fact_known) {
    r.simple_fact_confirmed = true;
    for (const auto& e : r.entries) {
      if (!e.signature.is_simple()) continue;
      if (e.status == ScanStatus::Feasible) r.simple_fact_consistent = false;
      if (e.status == ScanStatus::Feasible || e.status == ScanStatus::Inconclusive) r.simple_fact_confirmed = false;
    }
  }
  return r;
}

std::vector<Signature> ScanReport::feasible() const {
  std::vector<Signature> out;
  for (const auto& e : entries)
    if (e.status == ScanStatus::Feasible) out.push_back(e.signature);
  return out;
}

bool check_scan_report(const ScanReport& r, const ScanOptions& opts) {
  ScanOptions o = opts;
  o.real = r.real;
  o.field = r.field;
  const StructureTensor src = catalog_get(r.source, r.field).tensor, tgt = catalog_get(r.target, r.field).tensor;
  const auto classes = admissible_classes(tgt, r.max_exp);
  if (r.entries.size() != enumerate_signatures(src.dim(), r.max_exp).size()) return false;
  for (const auto& e : r.entries) {
    switch (e.status) {
      case ScanStatus::NotAdmissible:
        if (contains(classes, e.signature)) return false;
        break;
      case ScanStatus::Feasible:
        if (!e.witness || !realizes(src, r.target, e.signature, *e.witness)) return false;
        break;
      case ScanStatus::Infeasible:
        if (e.fingerprint_refutation) {
          if (!is_zero_signature(e.signature) || fingerprint(src) == fingerprint(tgt)) return false;
          break;
        }
        if (e.orderings != admissible_orderings(tgt, e.signature) || e.certificates.size() != e.orderings.size())
          return false;
        for (std::size_t k = 0; k < e.orderings.size(); ++k) {
          const auto& c = e.certificates[k];
          if (!accepted(c, r.field)) return false;
          if (!check_certificate(scan_system(r.source, r.target, e.orderings[k], o), c)) return false;
        }
        break;
      case ScanStatus::Inconclusive:
        break;
    }
  }
  return true;
}

json ScanReport::to_json() const {
  ScanOptions o;
  o.real = real;
  o.field = field;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["source"] = source;
  j["target"] = target;
  j["max_exp"] = max_exp;
  j["mode"] = real ? "real" : "complex";
  j["field"] = field_name(field);
  json list = json::array();
  for (const auto& e : entries) {
    json x;
    x["signature"] = e.signature.exponents;
    x["status"] = scan_status_name(e.status);
    if (e.witness) x["witness"] = iwc::to_json(*e.witness);
    if (e.fingerprint_refutation) x["refutation"] = "fingerprint";
    if (!e.orderings.empty()) {
      json ords = json::array();
      for (std::size_t k = 0; k < e.orderings.size(); ++k)
        ords.push_back({{"ordering", e.orderings[k].exponents},
                        {"certificate", certificate_to_json(e.certificates[k],
                                                            scan_system(source, target, e.orderings[k], o))}});
      x["orderings"] = ords;
    }
    if (!e.note.empty()) x["note"] = e.note;
    list.push_back(x);
  }
  j["entries"] = list;
  j["minimal"] = minimal ? json(minimal->exponents) : json(nullptr);
  std::vector<std::vector<int>> feas;
  for (const auto& s : feasible()) feas.push_back(s.exponents);
  j["feasible"] = feas;
  if (simple_fact_known)
    j["simple_iw_fact"] = {{"claim", "no simple IW-contraction"},
                           {"consistent", simple_fact_consistent},
                           {"confirmed", simple_fact_confirmed}};
  return j;
}

}  // namespace iwc
