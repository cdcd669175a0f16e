#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <vector>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// A machine replaying a fixed schedule: emit `solution` on step `at_step`.
// Used to exercise wrappers and amortizers against streams with known timing.
struct ScriptedEvent {
  uint64_t at_step;
  Solution solution;
};

struct Script {
  std::vector<ScriptedEvent> events;  // sorted by at_step, strictly increasing
  uint64_t total_steps = 0;           // >= last event step

  static Script from_events(std::vector<ScriptedEvent> evs, uint64_t total = 0) {
    Script s;
    s.events = std::move(evs);
    std::sort(s.events.begin(), s.events.end(),
              [](const ScriptedEvent& a, const ScriptedEvent& b) { return a.at_step < b.at_step; });
    s.total_steps = total;
    if (!s.events.empty()) s.total_steps = std::max(s.total_steps, s.events.back().at_step);
    return s;
  }
};

class ScriptedEnumerator final : public Enumerator {
 public:
  explicit ScriptedEnumerator(Script script, bool allow_snapshot = true)
      : script_(std::make_shared<const Script>(std::move(script))),
        allow_snapshot_(allow_snapshot) {}

  StepOutcome step() override {
    if (step_count_ >= script_->total_steps) return StepOutcome::make_done();
    ++step_count_;
    if (next_event_ < script_->events.size() &&
        script_->events[next_event_].at_step == step_count_) {
      return StepOutcome::make_emit(script_->events[next_event_++].solution);
    }
    return StepOutcome::make_continue();
  }

  bool snapshot_supported() const override { return allow_snapshot_; }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<ScriptedEnumerator>(*this);
  }

 private:
  std::shared_ptr<const Script> script_;
  uint64_t step_count_ = 0;
  size_t next_event_ = 0;
  bool allow_snapshot_ = true;
};

inline Machine scripted_machine(Script script, bool allow_snapshot = true) {
  return Machine::make<ScriptedEnumerator>(std::move(script), allow_snapshot);
}

// Distinct w-bit solution for index k; convenient for synthetic streams.
inline Solution indexed_solution(uint32_t width, uint64_t k) {
  Solution s(width);
  for (uint32_t i = 0; i < width; ++i)
    if ((k >> i) & 1) s.set(width - 1 - i, true);
  return s;
}

// The adversarial incremental-delay family: solutions 1..count-1 on steps
// 1..count-1, the last solution on step count*p. Worst raw delay among
// streams with incremental delay p and count solutions.
inline Script burst_at_deadline_script(uint64_t count, uint64_t p, uint32_t width) {
  std::vector<ScriptedEvent> evs;
  evs.reserve(count);
  for (uint64_t k = 1; k + 1 <= count; ++k) evs.push_back({k, indexed_solution(width, k)});
  if (count >= 1) evs.push_back({count * p, indexed_solution(width, count)});
  return Script::from_events(std::move(evs), count * p);
}

}  // namespace enumkit
