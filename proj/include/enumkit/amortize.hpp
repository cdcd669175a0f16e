#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// Parameters for the delay amortizers. `incremental_delay` is the bound p
// such that the k-th emission of the wrapped machine lands within k*p steps
// of the first one. `solution_count` upper-bounds the number of solutions
// when known. `epsilon` drives the unknown-delay variant.
struct AmortizationConfig {
  uint64_t incremental_delay = 1;
  std::optional<uint64_t> solution_count;
  double epsilon = 0.5;
};

// Counters exposed by the geometric amortizer for instrumentation.
struct GeoAmortizerStats {
  uint64_t pointer_count = 0;        // pointer objects over the run
  uint64_t duplications = 0;         // frontier duplications (adaptive variant)
  uint64_t total_advances = 0;       // underlying machine steps performed
  uint64_t invariant_checks = 0;
  uint64_t invariant_violations = 0; // advances where a pointer lagged the outputs below it
};

// Geometric amortization with a known solution-count bound: runs
// 1 + ceil(log2(count)) staggered copies of the machine, each owning a
// geometric zone of list positions, and turns incremental delay p into delay
// O(p log count). Zone j covers positions (2^{j-1} p, 2^j p], zone 0 covers
// [1, p]; every solution index lies in exactly one zone, so each solution is
// emitted exactly once. A copy whose zone is exhausted is retired, which
// keeps total work within a constant factor of the original run.
Machine geometric_amortize(Machine m, const AmortizationConfig& cfg);

// Same construction without knowing the count: a single frontier pointer
// stands in for all not-yet-created copies and is duplicated lazily when it
// crosses a zone boundary with machine output still ahead.
Machine geometric_amortize_adaptive(Machine m, uint64_t incremental_delay);

const GeoAmortizerStats* geo_stats(const Machine& m);

// Classical queue smoothing: buffer emissions and release them on a fixed
// p-step cadence (first release at most p-1 steps after the first arrival).
// Order is preserved; after the first output every gap is at most p; the
// queue may grow to the full solution count.
Machine queue_amortize(Machine m, uint64_t incremental_delay);

// Unknown-delay smoothing: maintain the running estimate
// p_hat = max_k ceil((T(k)-T(1))/k) and release one queued solution every
// ceil(p_hat^(1+epsilon)) steps. Order preserved; delay O(p^(1+epsilon)).
Machine adaptive_delay_amortize(Machine m, double epsilon);

// A seeded uniform sampler over a finite solution set. sample() returns
// nothing iff the set is empty. Deterministic given construction state.
class SolutionSampler {
 public:
  virtual ~SolutionSampler() = default;
  virtual std::optional<Solution> sample() = 0;
  virtual std::unique_ptr<SolutionSampler> clone() const = 0;
};

// Exhaustive enumeration from repeated sampling. Each step draws once; new
// solutions are emitted (store-based dedup). Halts after a no-new-solution
// streak long enough that, by a coupon-collector bound with per-phase budget
// 6*eps/(pi^2 (phase+1)^2), the total failure probability stays below eps.
// Termination is unconditional.
Machine sampler_to_enumerator(std::unique_ptr<SolutionSampler> sampler, double epsilon);

}  // namespace enumkit
