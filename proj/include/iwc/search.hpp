#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwc/certificate.hpp"
#include "iwc/contraction.hpp"
#include "iwc/signature.hpp"

namespace iwc {

/// Normalized tuples with entries in [0, max_exp], ascending by
/// SignatureOrder, no duplicates.
std::vector<Signature> enumerate_signatures(std::size_t n, int max_exp);

struct SearchOptions {
  std::size_t restarts = 2000;
  std::uint64_t seed = 1;
  bool parallel = true;
};

/// Matrices tried before the random phase: identity, then the remaining
/// permutation matrices in lexicographic order.
std::vector<Matrix> structured_candidates(std::size_t n, Field f);

/// Candidate k of the random phase; a pure function of (seed, k). Entries
/// come from {-2..2}/{1,2}; odd k draws sparse signed matrices instead.
Matrix random_candidate(std::size_t n, Field f, std::uint64_t seed, std::size_t k);

struct FindResult {
  std::optional<Matrix> witness;
  /// "structured" or "random"; index of the candidate within its phase.
  std::string phase;
  std::size_t index = 0;
  std::size_t restarts_used = 0;
};

/// Looks for A with verify_iw(source, {A, sig, I}, target) successful; the
/// returned witness has always passed that check. The first successful
/// candidate in sequence order wins, so the parallel and serial paths give
/// the same answer.
FindResult find_matrix(const StructureTensor& source, const std::string& target, const Signature& sig,
                       const SearchOptions& opts = {});

enum class ScanStatus { NotAdmissible, Infeasible, Feasible, Inconclusive };
const char* scan_status_name(ScanStatus s);

struct ScanEntry {
  Signature signature;  // normalized
  ScanStatus status = ScanStatus::Inconclusive;
  std::optional<Matrix> witness;
  /// Orderings of the class compatible with the target grading, each with
  /// its system certificate (in scan order).
  std::vector<Signature> orderings;
  std::vector<Certificate> certificates;
  /// Set when the zero signature is refuted by source/target fingerprints.
  bool fingerprint_refutation = false;
  std::string note;
};

struct ScanOptions {
  SearchOptions search;
  GroebnerOptions groebner;
  /// Real mode: for the so(3)+A1 -> A4.1 pair the (2,1,0,1) ordering uses
  /// the real-branch certificate of the shipped column system.
  bool real = false;
  Field field = Field::Rational;
};

struct ScanReport {
  std::string source, target;
  int max_exp = 0;
  bool real = false;
  Field field = Field::Rational;
  std::vector<ScanEntry> entries;
  std::optional<Signature> minimal;
  /// Pairs known to admit no simple (0/1) IW-contraction; the scan's own
  /// outcome on those signatures is compared against it.
  bool simple_fact_known = false;
  bool simple_fact_consistent = true;  // no simple signature came out feasible
  bool simple_fact_confirmed = false;  // every simple signature was refuted

  std::vector<Signature> feasible() const;
  json to_json() const;
};

/// Known pairs without a simple IW-contraction.
bool simple_iw_excluded(const std::string& source, const std::string& target);

/// Signatures are scanned in parallel (one task per signature) unless
/// opts.search.parallel is false; the report does not depend on that flag.
ScanReport minimality_scan(const std::string& source, const std::string& target, int max_exp,
                           const ScanOptions& opts = {});

/// Re-checks every feasible and infeasible line of a report.
bool check_scan_report(const ScanReport& r, const ScanOptions& opts = {});

/// The system whose certificate backs one ordering of a scan entry.
Ideal scan_system(const std::string& source, const std::string& target, const Signature& ordering,
                  const ScanOptions& opts);

constexpr int kSchemaVersion = 1;

}  // namespace iwc
