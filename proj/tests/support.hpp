#pragma once

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

#include "enumkit/dag.hpp"
#include "enumkit/dnf.hpp"
#include "enumkit/gf2.hpp"
#include "enumkit/oracle.hpp"
#include "enumkit/scripted.hpp"
#include "enumkit/set_system.hpp"
#include "enumkit/trace.hpp"

namespace enumkit::testsupport {

using Rng = std::mt19937_64;

inline Solution random_solution(Rng& rng, uint32_t width) {
  Solution s(width);
  for (uint32_t i = 0; i < width; ++i)
    if (rng() & 1) s.set(i, true);
  return s;
}

// A stream of solutions (possibly repeating) on random strictly increasing
// step indices.
inline Script random_script(Rng& rng, uint32_t width = 8, uint64_t max_events = 40,
                            uint64_t max_gap = 5, bool allow_repeats = true) {
  std::uniform_int_distribution<uint64_t> n_events(0, max_events);
  std::uniform_int_distribution<uint64_t> gap(1, max_gap);
  std::vector<ScriptedEvent> evs;
  uint64_t step = 0;
  std::vector<Solution> pool;
  std::unordered_set<Solution> used;
  const uint64_t count = n_events(rng);
  for (uint64_t i = 0; i < count; ++i) {
    step += gap(rng);
    Solution s = random_solution(rng, width);
    if (allow_repeats) {
      if (!pool.empty() && (rng() % 3) == 0) s = pool[rng() % pool.size()];
    } else {
      while (used.count(s)) s = random_solution(rng, width);
      used.insert(s);
    }
    pool.push_back(s);
    evs.push_back({step, std::move(s)});
  }
  return Script::from_events(std::move(evs), step + gap(rng));
}

// Repetition-free stream whose k-th emission lands within k*p of the first.
inline Script random_compliant_script(Rng& rng, uint64_t p, uint32_t width = 24,
                                      uint64_t max_events = 60) {
  std::uniform_int_distribution<uint64_t> n_events(1, max_events);
  const uint64_t count = n_events(rng);
  std::vector<ScriptedEvent> evs;
  uint64_t t1 = 1 + rng() % 5;  // preprocessing
  for (uint64_t k = 1; k <= count; ++k) {
    const uint64_t lo = k == 1 ? 1 : evs.back().at_step - t1 + 2;
    const uint64_t hi = k * p;
    const uint64_t pos = lo >= hi ? lo : lo + rng() % (hi - lo + 1);
    evs.push_back({t1 + pos - 1, indexed_solution(width, k)});
  }
  const uint64_t end = evs.back().at_step;
  return Script::from_events(std::move(evs), end);
}

inline SetSystem random_set_system(Rng& rng, uint32_t max_n = 10, uint32_t max_m = 8) {
  std::uniform_int_distribution<uint32_t> nd(1, max_n);
  std::uniform_int_distribution<uint32_t> md(0, max_m);
  const uint32_t n = nd(rng);
  const uint32_t m = md(rng);
  SetSystem x;
  x.n = n;
  for (uint32_t i = 0; i < m; ++i) x.sets.push_back(random_solution(rng, n));
  return x;
}

// Pairwise-distinct consistent terms (a variable appears at most once per term).
inline DnfFormula random_distinct_dnf(Rng& rng, uint32_t max_n = 12, uint32_t max_m = 10) {
  std::uniform_int_distribution<uint32_t> nd(1, max_n);
  const uint32_t n = nd(rng);
  std::uniform_int_distribution<uint32_t> md(1, max_m);
  const uint32_t m = md(rng);
  DnfFormula d;
  d.n = n;
  std::vector<std::vector<int>> seen;
  for (uint32_t t = 0; t < m && d.terms.size() < m; ++t) {
    std::vector<Literal> term;
    std::vector<int> key;
    for (uint32_t v = 1; v <= n; ++v) {
      switch (rng() % 3) {
        case 0:
          term.push_back({v, true});
          key.push_back(static_cast<int>(v));
          break;
        case 1:
          term.push_back({v, false});
          key.push_back(-static_cast<int>(v));
          break;
        default:
          break;
      }
    }
    bool dup = false;
    for (const auto& k : seen) dup = dup || k == key;
    if (dup) continue;
    seen.push_back(key);
    d.terms.push_back(std::move(term));
  }
  return d;
}

inline Dag random_dag(Rng& rng, uint32_t max_v = 14) {
  std::uniform_int_distribution<uint32_t> vd(2, max_v);
  const uint32_t v = vd(rng);
  // Arcs go forward along a random permutation, so the graph is acyclic.
  std::vector<uint32_t> order(v);
  for (uint32_t i = 0; i < v; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<uint32_t, uint32_t>> arcs;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (uint32_t i = 0; i < v; ++i)
    for (uint32_t j = i + 1; j < v; ++j)
      if (coin(rng) < 0.35) arcs.push_back({order[i], order[j]});
  return Dag::make(v, std::move(arcs), order.front(), order.back());
}

inline Gf2System random_gf2(Rng& rng, uint32_t max_r = 10, uint32_t max_n = 10) {
  std::uniform_int_distribution<uint32_t> rd(0, max_r);
  std::uniform_int_distribution<uint32_t> nd(1, max_n);
  Gf2System sys;
  sys.rows = rd(rng);
  sys.cols = nd(rng);
  sys.rhs = BitVec(sys.rows);
  for (uint32_t r = 0; r < sys.rows; ++r) {
    sys.row_coeffs.push_back(random_solution(rng, sys.cols));
    if (rng() & 1) sys.rhs.set(r, true);
  }
  return sys;
}

inline SolutionSet set_of(std::vector<Solution> v) { return SolutionSet(std::move(v)); }

}  // namespace enumkit::testsupport
