#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iwc/poly.hpp"

namespace iwc {

/// Default pair-reduction budget; IWC_BUDGET overrides it where the CLI
/// builds its options.
constexpr std::size_t kDefaultPairBudget = 200000;

struct GroebnerOptions {
  std::size_t max_pair_reductions = kDefaultPairBudget;
  /// Stop as soon as a nonzero constant appears.
  bool stop_on_unit = true;
  /// Keep the derivation trace (needed for unit certificates).
  bool record_trace = true;
};

/// One new basis element: the S-polynomial of elements i and j, fully
/// reduced by `reducers` (in that order of preference), then made monic.
/// Elements are numbered with the generators first.
struct TraceStep {
  std::size_t i = 0, j = 0;
  std::vector<std::size_t> reducers;
};

struct GroebnerResult {
  /// Reduced basis sorted by increasing leading monomial; {1} for a unit.
  std::vector<Poly> basis;
  bool complete = false;  // false: budget exhausted
  bool unit = false;
  std::size_t pair_reductions = 0;
  std::size_t zero_reductions = 0;
  /// Derivation of the unit restricted to its ancestors (when unit is set
  /// and tracing was on).
  std::vector<TraceStep> trace;
  /// With tracing on: every step of the run and the ids of the final
  /// (not inter-reduced) active elements, generators numbered first.
  std::vector<TraceStep> derivation;
  std::vector<std::size_t> active;
};

/// Keeps the steps needed to derive the target ids. `renumber` maps old
/// ids to positions in the pruned numbering (unused ids map to SIZE_MAX).
struct PrunedTrace {
  std::vector<TraceStep> trace;
  std::vector<std::size_t> renumber;
};
PrunedTrace prune_trace(const std::vector<TraceStep>& steps, std::size_t ngens,
                        const std::vector<std::size_t>& targets);

GroebnerResult buchberger(const Ideal& ideal, const GroebnerOptions& opts = {});

/// Full normal form of p by the ordered list g (first divisor wins).
/// `used`, when given, receives the indices of g that were applied.
Poly reduce(const Poly& p, const std::vector<Poly>& g, std::vector<std::size_t>* used = nullptr);

Poly s_polynomial(const Poly& f, const Poly& g);

/// Every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Poly>& g);

/// Replays a trace from the ideal's generators. Returns the derived
/// elements (generators first) or nullopt when a step reduces to zero or
/// references a missing element.
std::optional<std::vector<Poly>> replay_trace(const Ideal& ideal, const std::vector<TraceStep>& trace);

}  // namespace iwc
