#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// One recorded emission: the machine emitted `solution` on its
// `step_index`-th step (1-based).
struct TraceEvent {
  uint64_t step_index;
  Solution solution;
};

// The observable history of a run. total_steps counts every step() call that
// performed work (Continue or Emit); the final Done probe is free, matching
// the convention that enumeration stops with the last solution. Step indices
// strictly increase.
struct Trace {
  uint64_t preprocessing_steps = 0;  // step index of the first event, or total_steps
  std::vector<TraceEvent> events;
  uint64_t total_steps = 0;
  std::optional<uint64_t> seed;  // recorded for randomized machines

  uint64_t count() const { return events.size(); }
};

struct RunLimits {
  uint64_t step_budget = 1'000'000'000;       // global ceiling, configurable
  std::optional<uint64_t> emit_limit;         // truncate after this many emissions
};

// Drive a machine to completion (or to the emission limit) and record its
// trace. Throws StepBudgetExceeded when the ceiling is hit.
Trace run(Machine& m, const RunLimits& limits = {});

// Delay statistics derived from a trace. Preprocessing is reported separately
// and never enters max_delay; there is no postprocessing term.
struct DelayReport {
  uint64_t count = 0;
  uint64_t preprocessing = 0;
  uint64_t max_delay = 0;
  double avg_delay = 0.0;                 // (T(s) - T(1)) / (s - 1), 0 when s < 2
  uint64_t delay_span = 0;                // T(s) - T(1), exact numerator
  uint64_t total_steps = 0;
  // (k, T(x,k) - T(x,1)) for every k.
  std::vector<std::pair<uint64_t, uint64_t>> incremental_profile;
};

DelayReport delay_report(const Trace& t);

struct DuplicateReport {
  bool ok = true;
  // 1-based ordinals of the first offending event pair.
  std::optional<std::pair<uint64_t, uint64_t>> first_pair;
};

// True iff all emitted solutions are pairwise distinct in canonical form.
DuplicateReport verify_no_duplicates(const Trace& t);

// Smallest p such that the k-th emission lands within k*p steps of the first
// (anchored so the first emission sits at position 1). 1 for traces with
// fewer than two events.
uint64_t measured_incremental_delay(const Trace& t);

}  // namespace enumkit
