#include "enumkit/amortize.hpp"

#include <cassert>
#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include "enumkit/dedup.hpp"

namespace enumkit {
namespace {

uint32_t ceil_log2(uint64_t v) {
  uint32_t r = 0;
  uint64_t pow = 1;
  while (pow < v) {
    pow <<= 1;
    ++r;
  }
  return r;
}

// Runs staggered copies ("pointers") of one machine over its own step
// sequence. List positions are anchored so the machine's first emission sits
// at position 1; everything before it is preprocessing, replayed once up
// front. Pointer j may emit only from its zone of positions ((2^{j-1}p, 2^j p],
// or [1, p] for j = 0), so each solution index belongs to exactly one pointer
// and nothing is emitted twice. Control cascades from the highest pointer
// downward with a budget of 2p advances per visit; an emission resets the
// cascade to the top; a cascade that falls off the bottom ends the run, after
// a probe of the furthest copy that turns any leftover emission (possible
// only when the declared incremental delay was violated) into a loud error.
// Pointers past their zone or at the end of the machine are retired, which
// keeps total advances within twice the original run.
//
// Without a solution-count bound the copies ahead of their zones would all
// traverse the same positions, so a single frontier pointer stands in for
// them; it is duplicated whenever it enters the lowest zone without an owner,
// the duplicate resuming the sweep for the zones beyond.
class GeometricAmortizer final : public Enumerator {
 public:
  GeometricAmortizer(Machine m, uint64_t p, std::optional<uint64_t> solution_count)
      : p_(p), adaptive_(!solution_count.has_value()), seed_(std::move(m)) {
    if (p_ == 0) throw ValidationError("incremental delay must be at least 1");
    if (!seed_->snapshot_supported())
      throw SnapshotUnsupported("geometric amortization requires snapshot/restore");
    if (!adaptive_) {
      if (*solution_count == 0)
        throw ValidationError("solution count bound must be at least 1");
      fixed_pointer_count_ = 1 + ceil_log2(*solution_count);
    }
  }

  StepOutcome step() override {
    switch (phase_) {
      case Phase::Preprocess:
        return preprocess_step();
      case Phase::Cascade:
        return cascade_step();
      case Phase::Probe:
        return probe_step();
      case Phase::Halted:
        return StepOutcome::make_done();
    }
    return StepOutcome::make_done();
  }

  const GeoAmortizerStats& stats() const { return stats_; }

  GeometricAmortizer(const GeometricAmortizer&) = default;

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<GeometricAmortizer>(*this);
  }

 private:
  enum class Phase { Preprocess, Cascade, Probe, Halted };

  struct Pointer {
    Machine machine;            // physically at `positions_read` entries past the anchor
    uint64_t zone_lo;
    uint64_t zone_hi;
    uint64_t positions_read = 0;
    uint64_t emissions_seen = 0;
    uint64_t outputs = 0;
    uint64_t outputs_below = 0;  // running total over all lower pointers
    uint64_t birth_positions = 0;      // baseline taken at the first visit
    uint64_t birth_outputs_below = 0;
    bool baselined = false;
    bool retired = false;
    bool machine_done = false;
  };

  // Advance the seed machine until its first emission; the saved state just
  // before that emission anchors position 1 for every pointer.
  StepOutcome preprocess_step() {
    MachineState before = seed_->snapshot();
    StepOutcome out = seed_->step();
    if (out.is_done()) {
      phase_ = Phase::Halted;
      return StepOutcome::make_done();
    }
    if (!out.is_emit()) return StepOutcome::make_continue();
    seed_->restore(before);
    const size_t n_pointers = adaptive_ ? 1 : fixed_pointer_count_;
    pointers_.reserve(n_pointers);
    for (size_t j = 0; j + 1 < n_pointers; ++j)
      pointers_.push_back(make_pointer(seed_->fork(), static_cast<uint32_t>(j)));
    pointers_.push_back(make_pointer(std::move(*seed_), static_cast<uint32_t>(n_pointers - 1)));
    seed_.reset();
    stats_.pointer_count = n_pointers;
    phase_ = Phase::Cascade;
    cursor_ = static_cast<int>(pointers_.size()) - 1;
    budget_ = 2 * p_;
    return StepOutcome::make_continue();
  }

  StepOutcome cascade_step() {
    while (true) {
      if (cursor_ < 0) {
        // With the pointer count fixed up front, a fully silent cascade means
        // no solution remains (checked by the probe). The frontier variant
        // instead keeps cascading until every zone owner has finished, since
        // its late-born workers may still be mid-zone.
        if (adaptive_ && any_live()) {
          cursor_ = static_cast<int>(pointers_.size()) - 1;
          budget_ = 2 * p_;
          continue;
        }
        begin_probe();
        return probe_step();
      }
      Pointer& p = pointers_[static_cast<size_t>(cursor_)];
      if (p.retired || budget_ == 0) {
        --cursor_;
        budget_ = 2 * p_;
        continue;
      }
      break;
    }
    const size_t at = static_cast<size_t>(cursor_);
    --budget_;
    if (!pointers_[at].baselined) {
      pointers_[at].baselined = true;
      pointers_[at].birth_positions = pointers_[at].positions_read;
      pointers_[at].birth_outputs_below = pointers_[at].outputs_below;
    }
    const bool was_frontier = at + 1 == pointers_.size();
    StepOutcome out = advance(pointers_[at]);
    if (pointers_[at].machine_done) return StepOutcome::make_continue();
    if (at >= 1) {
      // Every output below this pointer since its creation implies a prior
      // full budget burned here, so its counter keeps pace with p times those
      // outputs (pointers present from the start inherit zero).
      ++stats_.invariant_checks;
      const Pointer& q = pointers_[at];
      if (q.positions_read + 1 <
          q.birth_positions + p_ * (q.outputs_below - q.birth_outputs_below))
        ++stats_.invariant_violations;
    }
    const bool in_zone = out.is_emit() &&
                         pointers_[at].zone_lo <= pointers_[at].positions_read &&
                         pointers_[at].positions_read <= pointers_[at].zone_hi;
    if (in_zone) record_output(at);
    // The frontier entering the lowest unowned zone stays behind to work it;
    // its duplicate carries the sweep on toward the zones beyond.
    if (adaptive_ && was_frontier &&
        pointers_[at].positions_read == pointers_[at].zone_lo && !pointers_[at].machine_done)
      split_frontier(at);
    if (pointers_[at].positions_read >= pointers_[at].zone_hi &&
        !(adaptive_ && at + 1 == pointers_.size()))
      pointers_[at].retired = true;
    if (in_zone) {
      cursor_ = static_cast<int>(pointers_.size()) - 1;
      budget_ = 2 * p_;
      return out;
    }
    return StepOutcome::make_continue();
  }

  // One machine step of `ptr` with position and compliance accounting.
  StepOutcome advance(Pointer& ptr) {
    StepOutcome out = ptr.machine.step();
    if (out.is_done()) {
      ptr.machine_done = true;
      ptr.retired = true;
      return out;
    }
    ++ptr.positions_read;
    ++stats_.total_advances;
    if (out.is_emit()) {
      ++ptr.emissions_seen;
      if (ptr.positions_read > ptr.emissions_seen * p_)
        throw IncrementalDelayViolated(
            "emission " + std::to_string(ptr.emissions_seen) + " at position " +
            std::to_string(ptr.positions_read) + " breaks the declared incremental delay " +
            std::to_string(p_));
    }
    return out;
  }

  void record_output(size_t idx) {
    ++pointers_[idx].outputs;
    for (size_t j = idx + 1; j < pointers_.size(); ++j) ++pointers_[j].outputs_below;
  }

  bool any_live() const {
    for (const Pointer& q : pointers_)
      if (!q.retired) return true;
    return false;
  }

  void split_frontier(size_t at) {
    Pointer next = Pointer{pointers_[at].machine.fork(), 0, 0};
    const uint32_t next_index = static_cast<uint32_t>(pointers_.size());
    next.zone_lo = zone_lo_of(next_index);
    next.zone_hi = zone_hi_of(next_index);
    next.positions_read = pointers_[at].positions_read;
    next.emissions_seen = pointers_[at].emissions_seen;
    next.outputs_below = pointers_[at].outputs_below + pointers_[at].outputs;
    pointers_.push_back(std::move(next));
    ++stats_.pointer_count;
    ++stats_.duplications;
  }

  uint64_t zone_lo_of(uint32_t index) const {
    return index == 0 ? 1 : (uint64_t{1} << (index - 1)) * p_ + 1;
  }
  uint64_t zone_hi_of(uint32_t index) const { return (uint64_t{1} << index) * p_; }

  Pointer make_pointer(Machine m, uint32_t index) const {
    return Pointer{std::move(m), zone_lo_of(index), zone_hi_of(index)};
  }

  // After a silent cascade no solution may remain. Walk the furthest copy to
  // the end of the machine; any emission found proves the incremental-delay
  // declaration wrong and is reported instead of being silently dropped.
  void begin_probe() {
    phase_ = Phase::Probe;
    probe_index_ = npos;
    for (size_t i = 0; i < pointers_.size(); ++i) {
      if (pointers_[i].machine_done) {
        probe_index_ = npos;
        return;  // machine end already reached; nothing can remain
      }
      if (probe_index_ == npos ||
          pointers_[i].positions_read > pointers_[probe_index_].positions_read)
        probe_index_ = i;
    }
  }

  StepOutcome probe_step() {
    if (probe_index_ == npos) {
      phase_ = Phase::Halted;
      return StepOutcome::make_done();
    }
    Pointer& ptr = pointers_[probe_index_];
    StepOutcome out = advance(ptr);
    if (ptr.machine_done) {
      phase_ = Phase::Halted;
      return StepOutcome::make_done();
    }
    if (out.is_emit())
      throw IncrementalDelayViolated(
          "solution left behind at position " + std::to_string(ptr.positions_read) +
          "; the declared incremental delay " + std::to_string(p_) + " does not hold");
    return StepOutcome::make_continue();
  }

  static constexpr size_t npos = static_cast<size_t>(-1);

  uint64_t p_;
  bool adaptive_;
  size_t fixed_pointer_count_ = 1;
  std::optional<Machine> seed_;
  std::vector<Pointer> pointers_;
  Phase phase_ = Phase::Preprocess;
  int cursor_ = -1;
  uint64_t budget_ = 0;
  size_t probe_index_ = npos;
  GeoAmortizerStats stats_;
};

// Deadline-driven queue: the k-th release happens on step T1 + p - 1 + (k-1)p
// where T1 is the arrival step of the first emission. Under incremental delay
// p every deadline finds the queue non-empty, so post-first-output gaps are
// exactly p, and a stream already on a p cadence keeps its gap pattern.
class QueueAmortizer final : public Enumerator {
 public:
  QueueAmortizer(Machine m, uint64_t p) : inner_(std::move(m)), p_(p) {
    if (p_ == 0) throw ValidationError("incremental delay must be at least 1");
  }

  StepOutcome step() override {
    if (inner_done_ && queue_.empty()) return StepOutcome::make_done();
    ++own_steps_;
    if (!inner_done_) {
      StepOutcome out = inner_.step();
      if (out.is_done()) {
        inner_done_ = true;
      } else {
        ++inner_steps_;
        if (out.is_emit()) {
          ++seen_;
          if (!t1_) t1_ = inner_steps_;
          const uint64_t pos = inner_steps_ - *t1_ + 1;
          if (pos > seen_ * p_)
            throw IncrementalDelayViolated("emission " + std::to_string(seen_) +
                                           " at position " + std::to_string(pos) +
                                           " breaks incremental delay " + std::to_string(p_));
          queue_.push_back(std::move(out.solution));
        }
      }
    }
    if (!queue_.empty() && own_steps_ >= *t1_ + p_ - 1 + released_ * p_) {
      Solution s = std::move(queue_.front());
      queue_.pop_front();
      ++released_;
      return StepOutcome::make_emit(std::move(s));
    }
    if (inner_done_ && queue_.empty()) return StepOutcome::make_done();
    return StepOutcome::make_continue();
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<QueueAmortizer>(*this);
  }

 private:
  Machine inner_;
  uint64_t p_;
  std::deque<Solution> queue_;
  bool inner_done_ = false;
  uint64_t own_steps_ = 0;
  uint64_t inner_steps_ = 0;
  std::optional<uint64_t> t1_;
  uint64_t seen_ = 0;
  uint64_t released_ = 0;
};

class AdaptiveDelayAmortizer final : public Enumerator {
 public:
  AdaptiveDelayAmortizer(Machine m, double epsilon) : inner_(std::move(m)), epsilon_(epsilon) {
    if (!(epsilon_ > 0)) throw ValidationError("epsilon must be positive");
  }

  StepOutcome step() override {
    if (inner_done_ && queue_.empty()) return StepOutcome::make_done();
    ++own_steps_;
    if (!inner_done_) {
      StepOutcome out = inner_.step();
      if (out.is_done()) {
        inner_done_ = true;
      } else {
        ++inner_steps_;
        if (out.is_emit()) {
          ++seen_;
          if (!t1_) t1_ = inner_steps_;
          const uint64_t span = inner_steps_ - *t1_;
          const uint64_t est = (span + seen_ - 1) / seen_;  // ceil(span / k)
          if (est > p_hat_) {
            p_hat_ = est;
            interval_ = static_cast<uint64_t>(
                std::ceil(std::pow(static_cast<double>(p_hat_), 1.0 + epsilon_)));
            if (interval_ == 0) interval_ = 1;
          }
          queue_.push_back(std::move(out.solution));
        }
      }
    }
    if (!queue_.empty()) {
      const bool due = inner_done_ || released_ == 0 || own_steps_ >= last_release_ + interval_;
      if (due) {
        Solution s = std::move(queue_.front());
        queue_.pop_front();
        ++released_;
        last_release_ = own_steps_;
        return StepOutcome::make_emit(std::move(s));
      }
    }
    if (inner_done_ && queue_.empty()) return StepOutcome::make_done();
    return StepOutcome::make_continue();
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<AdaptiveDelayAmortizer>(*this);
  }

 private:
  Machine inner_;
  double epsilon_;
  std::deque<Solution> queue_;
  bool inner_done_ = false;
  uint64_t own_steps_ = 0;
  uint64_t inner_steps_ = 0;
  std::optional<uint64_t> t1_;
  uint64_t seen_ = 0;
  uint64_t released_ = 0;
  uint64_t last_release_ = 0;
  uint64_t p_hat_ = 1;
  uint64_t interval_ = 1;
};

class SamplerEnumerator final : public Enumerator {
 public:
  SamplerEnumerator(std::unique_ptr<SolutionSampler> sampler, double epsilon)
      : sampler_(std::move(sampler)), epsilon_(epsilon) {
    if (!(epsilon_ > 0 && epsilon_ < 1)) throw ValidationError("epsilon must be in (0,1)");
    required_ = required_streak(0, 0);
  }

  StepOutcome step() override {
    if (halted_) return StepOutcome::make_done();
    std::optional<Solution> s = sampler_->sample();
    if (!s) {
      halted_ = true;
      return StepOutcome::make_done();
    }
    if (seen_.insert(*s)) {
      ++distinct_;
      ++phase_;
      streak_ = 0;
      required_ = required_streak(distinct_, phase_);
      return StepOutcome::make_emit(std::move(*s));
    }
    ++streak_;
    if (streak_ >= required_) {
      halted_ = true;
      return StepOutcome::make_done();
    }
    return StepOutcome::make_continue();
  }

  SamplerEnumerator(const SamplerEnumerator& o)
      : sampler_(o.sampler_->clone()),
        epsilon_(o.epsilon_),
        seen_(o.seen_),
        distinct_(o.distinct_),
        phase_(o.phase_),
        streak_(o.streak_),
        required_(o.required_),
        halted_(o.halted_) {}

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<SamplerEnumerator>(*this);
  }

 private:
  // If more than c solutions exist, a fresh draw is new with probability at
  // least 1/(c+1); this streak length pushes the per-phase failure under
  // 6*eps/(pi^2 (phase+1)^2), and those budgets sum below eps.
  uint64_t required_streak(uint64_t c, uint64_t phase) const {
    const double pi2_over_6 = 1.6449340668482264;
    const double arg = static_cast<double>(c + 1) * pi2_over_6 *
                       static_cast<double>((phase + 1) * (phase + 1)) / epsilon_;
    const double r = static_cast<double>(c + 1) * std::log(arg);
    return static_cast<uint64_t>(std::ceil(std::max(1.0, r)));
  }

  std::unique_ptr<SolutionSampler> sampler_;
  double epsilon_;
  SolutionTrie seen_;
  uint64_t distinct_ = 0;
  uint64_t phase_ = 0;
  uint64_t streak_ = 0;
  uint64_t required_ = 1;
  bool halted_ = false;
};

}  // namespace

Machine geometric_amortize(Machine m, const AmortizationConfig& cfg) {
  if (!cfg.solution_count)
    throw ValidationError("geometric_amortize needs a solution count bound; "
                          "use geometric_amortize_adaptive without one");
  return Machine::make<GeometricAmortizer>(std::move(m), cfg.incremental_delay,
                                           cfg.solution_count);
}

Machine geometric_amortize_adaptive(Machine m, uint64_t incremental_delay) {
  return Machine::make<GeometricAmortizer>(std::move(m), incremental_delay, std::nullopt);
}

const GeoAmortizerStats* geo_stats(const Machine& m) {
  const auto* g = m.as<GeometricAmortizer>();
  return g ? &g->stats() : nullptr;
}

Machine queue_amortize(Machine m, uint64_t incremental_delay) {
  return Machine::make<QueueAmortizer>(std::move(m), incremental_delay);
}

Machine adaptive_delay_amortize(Machine m, double epsilon) {
  return Machine::make<AdaptiveDelayAmortizer>(std::move(m), epsilon);
}

Machine sampler_to_enumerator(std::unique_ptr<SolutionSampler> sampler, double epsilon) {
  return Machine::make<SamplerEnumerator>(std::move(sampler), epsilon);
}

}  // namespace enumkit
