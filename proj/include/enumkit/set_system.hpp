#pragma once

#include <cstdint>
#include <vector>

#include "enumkit/dedup.hpp"
#include "enumkit/enumerator.hpp"

namespace enumkit {

// A list of subsets of {1..n}. Duplicates and empty member sets are allowed.
struct SetSystem {
  uint32_t n = 0;
  std::vector<BitVec> sets;

  static SetSystem from_lists(uint32_t n, const std::vector<std::vector<int>>& lists) {
    SetSystem s;
    s.n = n;
    s.sets.reserve(lists.size());
    for (const auto& l : lists) s.sets.push_back(BitVec::from_elements(n, l));
    return s;
  }

  size_t m() const { return sets.size(); }
};

// Extension test for the union closure: with x^B the union of all member
// sets avoiding B, a set extending A and avoiding B exists iff A is contained
// in x^B. A and B must be disjoint. Cost O(mn).
bool union_extension(const SetSystem& x, const BitVec& a, const BitVec& b);

// Is y a member of the union closure (a union of a nonempty subfamily)?
bool union_closure_member(const SetSystem& x, const BitVec& y);

// Backtracking search over characteristic-vector prefixes with the
// union_extension oracle; emits the closure in lexicographic order.
Machine union_flashlight(const SetSystem& x);

// Traversal of the solution graph with arcs y -> y ∪ s_i, starting from the
// empty set, visited set stored. Exponential space accepted.
Machine union_supergraph(const SetSystem& x,
                         uint64_t store_budget = SolutionTrie::kDefaultNodeBudget);

// Traversal of the implicit spanning forest given by the prefix-union parent
// rule; needs no visited store, working space one branch.
Machine union_reverse_search(const SetSystem& x);

// Parent of z under the prefix-union rule: with I(z) the indices of member
// sets inside z and k* the first index whose prefix union over I(z) reaches
// z, the parent is the union of the I(z)-indices before k*. Empty parent (or
// z outside the closure) means z is a root. parent(z) is strictly inside z.
struct ParentResult {
  bool in_closure = false;
  bool is_root = false;
  BitVec parent;
};
ParentResult union_parent(const SetSystem& x, const BitVec& z);

enum class ClosureOperator { Union, Intersection };

// Naive saturation: seed with the member sets, repeatedly combine known pairs
// with the operator, emit new elements until fixpoint. Intersection runs as
// union on complemented sets with complemented output.
Machine closure_saturate(const SetSystem& x, ClosureOperator op,
                         uint64_t store_budget = SolutionTrie::kDefaultNodeBudget);

}  // namespace enumkit
