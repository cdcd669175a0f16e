#include "enumkit/trace.hpp"

#include <unordered_map>

namespace enumkit {

Trace run(Machine& m, const RunLimits& limits) {
  Trace t;
  while (true) {
    if (limits.emit_limit && t.events.size() >= *limits.emit_limit) break;
    StepOutcome out = m.step();
    if (out.is_done()) break;
    ++t.total_steps;
    if (t.total_steps > limits.step_budget)
      throw StepBudgetExceeded("step budget of " + std::to_string(limits.step_budget) +
                               " exceeded");
    if (out.is_emit()) t.events.push_back({t.total_steps, std::move(out.solution)});
  }
  t.preprocessing_steps = t.events.empty() ? t.total_steps : t.events.front().step_index;
  return t;
}

DelayReport delay_report(const Trace& t) {
  DelayReport r;
  r.count = t.events.size();
  r.preprocessing = t.preprocessing_steps;
  r.total_steps = t.total_steps;
  r.incremental_profile.reserve(t.events.size());
  for (size_t i = 0; i < t.events.size(); ++i) {
    const uint64_t ti = t.events[i].step_index;
    r.incremental_profile.emplace_back(i + 1, ti - t.events.front().step_index);
    if (i > 0) {
      const uint64_t gap = ti - t.events[i - 1].step_index;
      if (gap > r.max_delay) r.max_delay = gap;
    }
  }
  if (r.count >= 2) {
    r.delay_span = t.events.back().step_index - t.events.front().step_index;
    r.avg_delay = static_cast<double>(r.delay_span) / static_cast<double>(r.count - 1);
  }
  return r;
}

DuplicateReport verify_no_duplicates(const Trace& t) {
  DuplicateReport rep;
  std::unordered_map<Solution, uint64_t> first_seen;
  for (size_t i = 0; i < t.events.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(t.events[i].solution, i + 1);
    if (!inserted) {
      rep.ok = false;
      rep.first_pair = {it->second, i + 1};
      return rep;
    }
  }
  return rep;
}

uint64_t measured_incremental_delay(const Trace& t) {
  if (t.events.size() < 2) return 1;
  const uint64_t t1 = t.events.front().step_index;
  uint64_t p = 1;
  for (size_t i = 0; i < t.events.size(); ++i) {
    const uint64_t pos = t.events[i].step_index - t1 + 1;
    const uint64_t k = i + 1;
    const uint64_t need = (pos + k - 1) / k;  // ceil(pos / k)
    if (need > p) p = need;
  }
  return p;
}

}  // namespace enumkit
