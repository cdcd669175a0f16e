#include "enumkit/flashlight.hpp"

#include <deque>
#include <string>
#include <vector>

#include "enumkit/amortize.hpp"
#include "enumkit/trace.hpp"

namespace enumkit {
namespace {

// Explicit-stack DFS over the prefix tree. One step is one tree transition:
// expand (test both children), descend one level, emit a verified leaf, or
// backtrack one level.
class FlashlightEnumerator final : public Enumerator {
 public:
  explicit FlashlightEnumerator(std::unique_ptr<BinaryPartitionProblem> problem)
      : problem_(std::move(problem)), prefix_(problem_->ground_size()) {}

  StepOutcome step() override {
    if (done_) return StepOutcome::make_done();
    if (!root_checked_) {
      root_checked_ = true;
      ++stats_.oracle_calls;
      if (!problem_->root_extendable()) {
        done_ = true;
        return StepOutcome::make_done();
      }
      frames_.push_back(Frame{});
      return StepOutcome::make_continue();
    }
    Frame& frame = frames_.back();
    const uint32_t depth = prefix_.decided();
    if (depth == prefix_.ground_size()) {
      if (!frame.emitted) {
        frame.emitted = true;
        Solution s = prefix_.to_solution();
        if (!problem_->is_solution(s))
          throw OracleInconsistent("extension oracle accepted the complete prefix " +
                                   s.to_string() + " but it is not a solution");
        return StepOutcome::make_emit(std::move(s));
      }
      return backtrack();
    }
    if (!frame.expanded) {
      frame.expanded = true;
      ++stats_.nodes_expanded;
      stats_.oracle_calls += 2;
      frame.child_ok[0] = problem_->extendable_with(prefix_, false);
      frame.child_ok[1] = problem_->extendable_with(prefix_, true);
      return StepOutcome::make_continue();
    }
    while (frame.next_child < 2 && !frame.child_ok[frame.next_child]) ++frame.next_child;
    if (frame.next_child < 2) {
      const bool v = frame.next_child == 1;
      ++frame.next_child;
      problem_->push(prefix_, v);
      prefix_.push_back(v);
      frames_.push_back(Frame{});
      return StepOutcome::make_continue();
    }
    return backtrack();
  }

  const FlashlightStats& stats() const { return stats_; }

  FlashlightEnumerator(const FlashlightEnumerator& o)
      : problem_(o.problem_->clone()),
        prefix_(o.prefix_),
        frames_(o.frames_),
        root_checked_(o.root_checked_),
        done_(o.done_),
        stats_(o.stats_) {}

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<FlashlightEnumerator>(*this);
  }

 private:
  struct Frame {
    bool expanded = false;
    bool emitted = false;
    bool child_ok[2] = {false, false};
    uint32_t next_child = 0;
  };

  StepOutcome backtrack() {
    frames_.pop_back();
    if (frames_.empty()) {
      done_ = true;
      return StepOutcome::make_done();
    }
    problem_->pop();
    prefix_.pop_back();
    return StepOutcome::make_continue();
  }

  std::unique_ptr<BinaryPartitionProblem> problem_;
  PartialSolution prefix_;
  std::vector<Frame> frames_;
  bool root_checked_ = false;
  bool done_ = false;
  FlashlightStats stats_;
};

// Holds arrivals back until one full path worth of steps has passed since the
// first one, after which the stream obeys the declared incremental budget and
// can be released as it comes.
class PathBuffer final : public Enumerator {
 public:
  PathBuffer(Machine inner, uint64_t path_bound, uint64_t per_solution_budget)
      : inner_(std::move(inner)), path_bound_(path_bound), budget_(per_solution_budget) {}

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
          if (!t1_) {
            t1_ = inner_steps_;
            if (*t1_ > path_bound_ + 1)
              throw PathTimeExceeded("first root-to-leaf segment took " +
                                     std::to_string(*t1_) + " steps, bound " +
                                     std::to_string(path_bound_));
          }
          // Arrivals may lag the per-solution budget by at most one path.
          const uint64_t pos = inner_steps_ - *t1_ + 1;
          if (pos > seen_ * budget_ + path_bound_)
            throw PathTimeExceeded("solution " + std::to_string(seen_) + " arrived " +
                                   std::to_string(pos) + " steps in; path bound " +
                                   std::to_string(path_bound_) + " with budget " +
                                   std::to_string(budget_) + " does not hold");
          queue_.push_back(std::move(out.solution));
          if (queue_.size() > path_bound_ + 1)
            throw PathTimeExceeded("buffer outgrew the declared path bound " +
                                   std::to_string(path_bound_));
        }
      }
    }
    if (!queue_.empty() && (inner_done_ || own_steps_ >= *t1_ + path_bound_)) {
      Solution s = std::move(queue_.front());
      queue_.pop_front();
      return StepOutcome::make_emit(std::move(s));
    }
    if (inner_done_ && queue_.empty()) return StepOutcome::make_done();
    return StepOutcome::make_continue();
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<PathBuffer>(*this);
  }

 private:
  Machine inner_;
  uint64_t path_bound_;
  uint64_t budget_;
  std::deque<Solution> queue_;
  bool inner_done_ = false;
  uint64_t own_steps_ = 0;
  uint64_t inner_steps_ = 0;
  std::optional<uint64_t> t1_;
  uint64_t seen_ = 0;
};

}  // namespace

Machine flashlight_enumerate(std::unique_ptr<BinaryPartitionProblem> problem) {
  return Machine::make<FlashlightEnumerator>(std::move(problem));
}

const FlashlightStats* flashlight_stats(const Machine& m) {
  const auto* f = m.as<FlashlightEnumerator>();
  return f ? &f->stats() : nullptr;
}

Machine flashlight_with_path_amortization(std::unique_ptr<BinaryPartitionProblem> problem,
                                          uint64_t path_time_bound,
                                          std::optional<uint64_t> avg_delay_bound) {
  uint64_t budget;
  if (avg_delay_bound) {
    budget = *avg_delay_bound;
  } else {
    // Calibration run of an identical search to measure the incremental
    // budget the live run will declare.
    Machine probe = flashlight_enumerate(problem->clone());
    Trace t = run(probe);
    budget = measured_incremental_delay(t);
  }
  if (budget == 0) budget = 1;
  Machine search = flashlight_enumerate(std::move(problem));
  Machine buffered =
      Machine::make<PathBuffer>(std::move(search), path_time_bound, budget);
  return geometric_amortize_adaptive(std::move(buffered), budget);
}

}  // namespace enumkit
