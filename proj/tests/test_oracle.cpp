#include <doctest.h>

#include "support.hpp"

using namespace enumkit;
using namespace enumkit::testsupport;

namespace {

SolutionSet sets_of(uint32_t n, const std::vector<std::vector<int>>& lists) {
  std::vector<Solution> v;
  for (const auto& l : lists) v.push_back(BitVec::from_elements(n, l));
  return SolutionSet(std::move(v));
}

}  // namespace

TEST_CASE("brute union") {
  SUBCASE("worked instance") {
    const SetSystem x = SetSystem::from_lists(4, {{1, 2}, {2, 3}, {1, 4}, {1, 3, 4}});
    CHECK(brute_union(x) == sets_of(4, {{1, 2}, {2, 3}, {1, 4}, {1, 3, 4}, {1, 2, 3},
                                        {1, 2, 4}, {1, 2, 3, 4}}));
  }
  SUBCASE("no sets, no solutions") { CHECK(brute_union(SetSystem{3, {}}).size() == 0); }
  SUBCASE("one set is its own closure") {
    CHECK(brute_union(SetSystem::from_lists(3, {{2}})) == sets_of(3, {{2}}));
  }
  SUBCASE("size ceiling") {
    SetSystem x{1, std::vector<BitVec>(25, BitVec(1))};
    CHECK_THROWS_AS(brute_union(x), InstanceTooLarge);
  }
}

TEST_CASE("brute dnf") {
  SUBCASE("worked formula has four models") {
    const DnfFormula d = DnfFormula::from_signed(3, {{1, -2}, {2, 3}});
    CHECK(brute_dnf(d).size() == 4);
  }
  SUBCASE("no terms") { CHECK(brute_dnf(DnfFormula{2, {}}).size() == 0); }
  SUBCASE("covering tautology") {
    const DnfFormula d = DnfFormula::from_signed(1, {{1}, {-1}});
    CHECK(brute_dnf(d).size() == 2);
  }
}

TEST_CASE("brute paths") {
  SUBCASE("diamond") {
    const Dag g = Dag::make(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, 1, 4);
    CHECK(brute_paths(g).size() == 2);
  }
  SUBCASE("trivial path when source is target") {
    const Dag g = Dag::make(1, {}, 1, 1);
    const SolutionSet s = brute_paths(g);
    REQUIRE(s.size() == 1);
    CHECK(s.items()[0] == BitVec::from_elements(1, {1}));
  }
}

TEST_CASE("brute gf2") {
  const Gf2System sys = Gf2System::from_strings({"110"});
  CHECK(brute_gf2(sys) == sets_of(2, {{}, {1, 2}}));
}

TEST_CASE("oracles are pure and order-independent") {
  Rng rng(137);
  const SetSystem x = random_set_system(rng, 8, 6);
  CHECK(brute_union(x) == brute_union(x));
  SetSystem shuffled = x;
  std::reverse(shuffled.sets.begin(), shuffled.sets.end());
  CHECK(brute_union(shuffled) == brute_union(x));
}

TEST_CASE("compare reports") {
  const SetSystem x = SetSystem::from_lists(3, {{1}, {2}});
  const SolutionSet ref = brute_union(x);

  SUBCASE("matching trace") {
    Machine m = union_flashlight(x);
    Trace t = run(m);
    CHECK(compare(t, ref).empty());
  }
  SUBCASE("missing solution") {
    Machine m = union_flashlight(x);
    Trace t = run(m, RunLimits{1'000'000, 2});
    const CompareReport rep = compare(t, ref);
    CHECK(rep.missing.size() == 1);
    CHECK(rep.extra.empty());
  }
  SUBCASE("repetition is reported as duplicated") {
    Solution a = BitVec::from_elements(3, {1});
    Machine m = scripted_machine(Script::from_events({{1, a}, {2, a}}, 2));
    Trace t = run(m);
    const CompareReport rep = compare(t, ref);
    CHECK(rep.duplicated.size() == 1);
    CHECK(rep.missing.size() == 2);
  }
}

TEST_CASE("reflected code reference basics") {
  const auto words = rbc_reference(3);
  REQUIRE(words.size() == 8);
  CHECK(words.front().to_string() == "000");
  CHECK(words.back().to_string() == "100");
}
