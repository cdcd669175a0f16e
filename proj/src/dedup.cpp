#include "enumkit/dedup.hpp"

namespace enumkit {
namespace {

class DedupStore final : public Enumerator {
 public:
  DedupStore(Machine inner, uint64_t node_budget)
      : inner_(std::move(inner)), seen_(node_budget) {}

  StepOutcome step() override {
    StepOutcome out = inner_.step();
    if (!out.is_emit()) return out;
    if (seen_.insert(out.solution)) return out;
    return StepOutcome::make_continue();
  }

  bool snapshot_supported() const override { return inner_.snapshot_supported(); }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<DedupStore>(*this);
  }

 private:
  Machine inner_;
  SolutionTrie seen_;
};

// One wrapped step does one unit of underlying work: either one step of the
// main machine or one step of the replay, so the quadratic rerun cost is
// visible in the wrapped step count.
class DedupRerun final : public Enumerator {
 public:
  explicit DedupRerun(Machine inner)
      : inner_(std::move(inner)), initial_(inner_.snapshot()), scratch_(inner_) {}

  StepOutcome step() override {
    if (replaying_) {
      if (replay_done_ == replay_target_) {
        replaying_ = false;
        return StepOutcome::make_emit(std::move(pending_));
      }
      StepOutcome out = scratch_.step();
      ++replay_done_;
      if (out.is_emit() && out.solution == pending_) {
        replaying_ = false;  // appeared earlier; drop
        return StepOutcome::make_continue();
      }
      return StepOutcome::make_continue();
    }
    StepOutcome out = inner_.step();
    if (out.is_done()) return out;
    ++inner_steps_;
    if (!out.is_emit()) return StepOutcome::make_continue();
    pending_ = std::move(out.solution);
    replay_target_ = inner_steps_ - 1;
    replay_done_ = 0;
    scratch_.restore(initial_);
    replaying_ = true;
    if (replay_target_ == 0) {
      replaying_ = false;
      return StepOutcome::make_emit(std::move(pending_));
    }
    return StepOutcome::make_continue();
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<DedupRerun>(*this);
  }

 private:
  Machine inner_;
  MachineState initial_;
  Machine scratch_;
  uint64_t inner_steps_ = 0;
  bool replaying_ = false;
  uint64_t replay_target_ = 0;
  uint64_t replay_done_ = 0;
  Solution pending_;
};

}  // namespace

Machine dedup_by_store(Machine inner, uint64_t node_budget) {
  return Machine::make<DedupStore>(std::move(inner), node_budget);
}

Machine dedup_by_rerun(Machine inner) {
  if (!inner.snapshot_supported())
    throw SnapshotUnsupported("dedup_by_rerun requires snapshot/restore");
  return Machine::make<DedupRerun>(std::move(inner));
}

}  // namespace enumkit
