#include <doctest.h>

#include <unordered_map>
#include <unordered_set>

#include "enumkit/combine.hpp"
#include "enumkit/dedup.hpp"
#include "support.hpp"

using namespace enumkit;
using namespace enumkit::testsupport;

namespace {

Solution sol(const std::string& bits) { return BitVec::from_string(bits); }

Script three_emissions() {
  return Script::from_events(
      {{3, sol("001")}, {5, sol("010")}, {9, sol("011")}}, 9);
}

std::vector<Solution> emitted(const Trace& t) {
  std::vector<Solution> out;
  for (const auto& e : t.events) out.push_back(e.solution);
  return out;
}

}  // namespace

TEST_CASE("run records emissions with step indexes") {
  Machine m = scripted_machine(three_emissions());
  Trace t = run(m);
  REQUIRE(t.events.size() == 3);
  CHECK(t.events[0].step_index == 3);
  CHECK(t.events[1].step_index == 5);
  CHECK(t.events[2].step_index == 9);
  CHECK(t.total_steps == 9);
  CHECK(t.preprocessing_steps == 3);
}

TEST_CASE("run on an immediately finished machine") {
  Machine m = scripted_machine(Script::from_events({}, 0));
  Trace t = run(m);
  CHECK(t.events.empty());
  CHECK(t.total_steps == 0);
  CHECK(t.preprocessing_steps == t.total_steps);
}

TEST_CASE("run truncates at the emission limit") {
  Machine m = scripted_machine(three_emissions());
  Trace t = run(m, RunLimits{1'000'000, 2});
  REQUIRE(t.events.size() == 2);
  CHECK(t.events[1].step_index == 5);
  CHECK(t.total_steps == 5);
}

TEST_CASE("run enforces the step budget") {
  Machine m = scripted_machine(three_emissions());
  CHECK_THROWS_AS(run(m, RunLimits{4, std::nullopt}), StepBudgetExceeded);
}

TEST_CASE("delay report arithmetic") {
  Machine m = scripted_machine(three_emissions());
  DelayReport r = delay_report(run(m));
  CHECK(r.max_delay == 4);
  CHECK(r.avg_delay == doctest::Approx(3.0));
  CHECK(r.preprocessing == 3);
  CHECK(r.count == 3);
  REQUIRE(r.incremental_profile.size() == 3);
  CHECK(r.incremental_profile[2] == std::pair<uint64_t, uint64_t>{3, 6});
}

TEST_CASE("delay report of a single emission") {
  Machine m = scripted_machine(Script::from_events({{7, sol("1")}}, 7));
  DelayReport r = delay_report(run(m));
  CHECK(r.max_delay == 0);
  CHECK(r.avg_delay == 0.0);
  CHECK(r.preprocessing == 7);
}

TEST_CASE("delay report of uniform gaps") {
  const uint64_t p = 5, count = 12;
  std::vector<ScriptedEvent> evs;
  for (uint64_t k = 1; k <= count; ++k) evs.push_back({k * p, indexed_solution(8, k)});
  Machine m = scripted_machine(Script::from_events(std::move(evs), count * p));
  DelayReport r = delay_report(run(m));
  CHECK(r.max_delay == p);
  CHECK(r.avg_delay == doctest::Approx(static_cast<double>(p)));
}

TEST_CASE("duplicate detection") {
  Machine ok = scripted_machine(Script::from_events({{1, sol("01")}, {2, sol("10")}}, 2));
  CHECK(verify_no_duplicates(run(ok)).ok);

  Machine bad = scripted_machine(Script::from_events({{1, sol("01")}, {2, sol("01")}}, 2));
  auto rep = verify_no_duplicates(run(bad));
  CHECK(!rep.ok);
  REQUIRE(rep.first_pair.has_value());
  CHECK(*rep.first_pair == std::pair<uint64_t, uint64_t>{1, 2});

  Machine empty = scripted_machine(Script::from_events({}, 3));
  CHECK(verify_no_duplicates(run(empty)).ok);
}

TEST_CASE("deterministic replay gives bitwise identical traces") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Script s = random_script(rng);
    Machine a = scripted_machine(s);
    Machine b = scripted_machine(s);
    Trace ta = run(a), tb = run(b);
    REQUIRE(ta.total_steps == tb.total_steps);
    REQUIRE(ta.events.size() == tb.events.size());
    for (size_t k = 0; k < ta.events.size(); ++k) {
      CHECK(ta.events[k].step_index == tb.events[k].step_index);
      CHECK(ta.events[k].solution == tb.events[k].solution);
    }
  }
}

TEST_CASE("snapshot/restore reproduces the suffix exactly") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Script s = random_script(rng);
    Machine m = scripted_machine(s);
    const uint64_t stop = s.total_steps == 0 ? 0 : rng() % (s.total_steps + 1);
    std::vector<StepOutcome> suffix;
    for (uint64_t k = 0; k < stop; ++k) m.step();
    MachineState snap = m.snapshot();
    while (true) {
      StepOutcome out = m.step();
      suffix.push_back(out);
      if (out.is_done()) break;
    }
    m.restore(snap);
    for (const StepOutcome& expect : suffix) {
      StepOutcome out = m.step();
      CHECK(out.kind == expect.kind);
      if (expect.is_emit()) CHECK(out.solution == expect.solution);
    }
  }
}

TEST_CASE("dedup_by_store basics") {
  Solution s1 = sol("001"), s2 = sol("010"), s3 = sol("011");
  Machine inner = scripted_machine(
      Script::from_events({{1, s1}, {2, s2}, {3, s1}, {4, s3}}, 4));
  Machine w = dedup_by_store(std::move(inner));
  auto got = emitted(run(w));
  CHECK(got == std::vector<Solution>{s1, s2, s3});
}

TEST_CASE("dedup_by_store keeps repetition-free streams identical") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    Script s = random_script(rng, 8, 30, 4, false);
    Machine plain = scripted_machine(s);
    Machine w = dedup_by_store(scripted_machine(s));
    CHECK(emitted(run(plain)) == emitted(run(w)));
  }
}

TEST_CASE("dedup_by_store store budget") {
  Rng rng(29);
  Script s = random_script(rng, 8, 30, 4, true);
  Machine w = dedup_by_store(scripted_machine(s), 4);
  CHECK_THROWS_AS(run(w), StoreBudgetExceeded);
}

TEST_CASE("dedup_by_rerun basics and cost bound") {
  Solution s1 = sol("001"), s2 = sol("010");
  Machine w = dedup_by_rerun(
      scripted_machine(Script::from_events({{1, s1}, {2, s2}, {3, s1}}, 3)));
  Trace t = run(w);
  CHECK(emitted(t) == std::vector<Solution>{s1, s2});

  // Repetition-free stream of k solutions: steps stay within k x original.
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    Script s = random_script(rng, 8, 20, 4, false);
    Machine plain = scripted_machine(s);
    Trace orig = run(plain);
    Machine ww = dedup_by_rerun(scripted_machine(s));
    Trace wrapped = run(ww);
    CHECK(emitted(wrapped) == emitted(orig));
    CHECK(wrapped.total_steps <= (orig.events.size() + 1) * (orig.total_steps + 1));
  }
}

TEST_CASE("dedup_by_rerun requires snapshots") {
  Machine no_snap = scripted_machine(three_emissions(), false);
  CHECK_THROWS_AS(dedup_by_rerun(std::move(no_snap)), SnapshotUnsupported);
}

TEST_CASE("dedup wrappers agree on 1000 random streams") {
  Rng rng(37);
  for (int i = 0; i < 1000; ++i) {
    Script s = random_script(rng, 8, 25, 3, true);
    Machine a = dedup_by_store(scripted_machine(s));
    Machine b = dedup_by_rerun(scripted_machine(s));
    Machine plain = scripted_machine(s);

    Trace ta = run(a), tb = run(b), tp = run(plain);
    // Same sequence from both wrappers, set equal to the distinct set.
    CHECK(emitted(ta) == emitted(tb));
    CHECK(solution_set_of(ta) == solution_set_of(tp));
    CHECK(verify_no_duplicates(ta).ok);
  }
}

TEST_CASE("dedup_by_store against a 1000-solution random stream with repetitions") {
  Rng rng(41);
  std::vector<ScriptedEvent> evs;
  std::unordered_set<Solution> distinct;
  for (uint64_t k = 1; k <= 1000; ++k) {
    Solution s = random_solution(rng, 8);
    distinct.insert(s);
    evs.push_back({k, std::move(s)});
  }
  Machine w = dedup_by_store(scripted_machine(Script::from_events(std::move(evs), 1000)));
  Trace t = run(w);
  CHECK(t.events.size() == distinct.size());
  for (const auto& e : t.events) CHECK(distinct.count(e.solution) == 1);
}

TEST_CASE("interleave_union basics") {
  Solution s1 = sol("001"), s2 = sol("010");
  SUBCASE("disjoint parts") {
    Machine u = interleave_union(
        scripted_machine(Script::from_events({{1, s1}}, 1)),
        scripted_machine(Script::from_events({{1, s2}}, 1)),
        [s2](const Solution& s) { return s == s2; });
    Trace t = run(u);
    CHECK(solution_set_of(t) == set_of({s1, s2}));
    CHECK(verify_no_duplicates(t).ok);
  }
  SUBCASE("identical parts emit once") {
    Machine u = interleave_union(
        scripted_machine(Script::from_events({{1, s1}}, 1)),
        scripted_machine(Script::from_events({{1, s1}}, 1)),
        [](const Solution&) { return true; });
    Trace t = run(u);
    CHECK(t.events.size() == 1);
    CHECK(t.events[0].solution == s1);
  }
}

TEST_CASE("interleave_union equals the set union on random parts") {
  Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    // Two repetition-free streams over {0,1}^8 plus the exact membership test.
    Script sa = random_script(rng, 8, 20, 3, false);
    Script sb = random_script(rng, 8, 20, 3, false);
    std::unordered_set<Solution> in_b;
    for (const auto& e : sb.events) in_b.insert(e.solution);
    Machine u = interleave_union(scripted_machine(sa), scripted_machine(sb),
                                 [in_b](const Solution& s) { return in_b.count(s) > 0; });
    Trace t = run(u);
    std::vector<Solution> expect;
    for (const auto& e : sa.events) expect.push_back(e.solution);
    for (const auto& e : sb.events) expect.push_back(e.solution);
    CHECK(solution_set_of(t) == set_of(expect));
    CHECK(verify_no_duplicates(t).ok);
    const size_t inter =
        expect.size() - solution_set_of(t).size();  // |A| + |B| - |A u B|
    CHECK(t.events.size() == sa.events.size() + sb.events.size() - inter);
  }
}

TEST_CASE("cartesian_product") {
  Solution a1 = sol("01"), a2 = sol("10");
  Solution b1 = sol("001"), b2 = sol("010"), b3 = sol("100");
  SUBCASE("2 x 3 pairs") {
    Machine prod = cartesian_product(
        scripted_machine(Script::from_events({{1, a1}, {2, a2}}, 2)),
        scripted_machine(Script::from_events({{1, b1}, {2, b2}, {3, b3}}, 3)));
    Trace t = run(prod);
    CHECK(t.events.size() == 6);
    CHECK(verify_no_duplicates(t).ok);
    CHECK(t.events[0].solution == BitVec::concat(a1, b1));
    CHECK(t.events[5].solution == BitVec::concat(a2, b3));
  }
  SUBCASE("empty second part") {
    Machine prod = cartesian_product(
        scripted_machine(Script::from_events({{1, a1}, {2, a2}}, 2)),
        scripted_machine(Script::from_events({}, 1)));
    CHECK(run(prod).events.empty());
  }
  SUBCASE("random sets match the nested-loop oracle") {
    Rng rng(47);
    for (int i = 0; i < 200; ++i) {
      Script sa = random_script(rng, 4, 8, 2, false);
      Script sb = random_script(rng, 5, 8, 2, false);
      Machine prod = cartesian_product(scripted_machine(sa), scripted_machine(sb));
      std::vector<Solution> expect;
      for (const auto& ea : sa.events)
        for (const auto& eb : sb.events)
          expect.push_back(BitVec::concat(ea.solution, eb.solution));
      CHECK(solution_set_of(run(prod)) == set_of(expect));
    }
  }
}

TEST_CASE("cartesian_product needs a restartable second machine") {
  Machine a = scripted_machine(three_emissions());
  Machine b = scripted_machine(three_emissions(), false);
  CHECK_THROWS_AS(cartesian_product(std::move(a), std::move(b)), SnapshotUnsupported);
}
