#include "enumkit/combine.hpp"

#include <utility>

namespace enumkit {
namespace {

class InterleaveUnion final : public Enumerator {
 public:
  InterleaveUnion(Machine a, Machine b, std::function<bool(const Solution&)> member_of_b)
      : a_(std::move(a)), b_(std::move(b)), member_of_b_(std::move(member_of_b)) {}

  StepOutcome step() override {
    switch (phase_) {
      case Phase::DrainA: {
        StepOutcome out = a_.step();
        if (out.is_done()) {
          phase_ = Phase::DrainBRest;
          return StepOutcome::make_continue();
        }
        if (!out.is_emit()) return out;
        if (!member_of_b_(out.solution)) return out;
        phase_ = Phase::FetchB;
        return StepOutcome::make_continue();
      }
      case Phase::FetchB: {
        StepOutcome out = b_.step();
        if (out.is_done()) {
          phase_ = Phase::DrainA;  // b overdrawn; only possible with a lying predicate
          return StepOutcome::make_continue();
        }
        if (!out.is_emit()) return out;
        phase_ = Phase::DrainA;
        return out;
      }
      case Phase::DrainBRest:
        return b_.step();
    }
    return StepOutcome::make_done();
  }

  bool snapshot_supported() const override {
    return a_.snapshot_supported() && b_.snapshot_supported();
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<InterleaveUnion>(*this);
  }

 private:
  enum class Phase { DrainA, FetchB, DrainBRest };
  Machine a_;
  Machine b_;
  std::function<bool(const Solution&)> member_of_b_;
  Phase phase_ = Phase::DrainA;
};

class CartesianProduct final : public Enumerator {
 public:
  CartesianProduct(Machine a, Machine b)
      : a_(std::move(a)), b_initial_(b.snapshot()), b_(std::move(b)) {}

  StepOutcome step() override {
    if (running_b_) {
      StepOutcome out = b_.step();
      if (out.is_done()) {
        running_b_ = false;
        return StepOutcome::make_continue();
      }
      if (out.is_emit())
        return StepOutcome::make_emit(BitVec::concat(current_a_, out.solution));
      return out;
    }
    StepOutcome out = a_.step();
    if (out.is_done()) return out;
    if (out.is_emit()) {
      current_a_ = std::move(out.solution);
      b_.restore(b_initial_);
      running_b_ = true;
      return StepOutcome::make_continue();
    }
    return out;
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<CartesianProduct>(*this);
  }

 private:
  Machine a_;
  MachineState b_initial_;
  Machine b_;
  Solution current_a_;
  bool running_b_ = false;
};

}  // namespace

Machine interleave_union(Machine a, Machine b, std::function<bool(const Solution&)> member_of_b) {
  return Machine::make<InterleaveUnion>(std::move(a), std::move(b), std::move(member_of_b));
}

Machine cartesian_product(Machine a, Machine b) {
  if (!b.snapshot_supported())
    throw SnapshotUnsupported("cartesian_product requires a restartable second machine");
  return Machine::make<CartesianProduct>(std::move(a), std::move(b));
}

}  // namespace enumkit
