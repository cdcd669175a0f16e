#pragma once

#include <vector>

#include "enumkit/dag.hpp"
#include "enumkit/dnf.hpp"
#include "enumkit/gf2.hpp"
#include "enumkit/set_system.hpp"
#include "enumkit/trace.hpp"

namespace enumkit {

// Canonical sorted duplicate-free list of solutions. The reference
// representation every equivalence check compares against.
class SolutionSet {
 public:
  SolutionSet() = default;
  explicit SolutionSet(std::vector<Solution> items);

  const std::vector<Solution>& items() const { return items_; }
  size_t size() const { return items_.size(); }
  bool contains(const Solution& s) const;

  friend bool operator==(const SolutionSet& a, const SolutionSet& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<Solution> items_;  // sorted, unique
};

SolutionSet solution_set_of(const Trace& t);

// Exhaustive references. Deliberately naive, order-independent, and
// independent of the enumerators they check. Size ceilings keep every call
// in the seconds range; InstanceTooLarge beyond them.

// All unions of nonempty subfamilies; m <= 24.
SolutionSet brute_union(const SetSystem& x);

// All intersections of nonempty subfamilies; m <= 24.
SolutionSet brute_intersection(const SetSystem& x);

// All satisfying assignments by filtering {0,1}^n; n <= 24.
SolutionSet brute_dnf(const DnfFormula& d);

// All simple source-target paths (as vertex sets) by unpruned DFS;
// at most 2^20 paths.
SolutionSet brute_paths(const Dag& g);

// All vectors satisfying the system by filtering {0,1}^n; n <= 20.
SolutionSet brute_gf2(const Gf2System& sys);

// The reflected binary code as an ordered list; n <= 20.
std::vector<Solution> rbc_reference(uint32_t n);

struct CompareReport {
  std::vector<Solution> missing;     // in the reference, not in the trace
  std::vector<Solution> extra;       // in the trace, not in the reference
  std::vector<Solution> duplicated;  // emitted more than once

  bool empty() const { return missing.empty() && extra.empty() && duplicated.empty(); }
};

CompareReport compare(const Trace& t, const SolutionSet& reference);

}  // namespace enumkit
