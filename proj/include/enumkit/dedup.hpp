#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// Prefix tree over canonical bit vectors. insert() reports whether the
// solution was new. Node count is bounded by `node_budget`.
class SolutionTrie {
 public:
  explicit SolutionTrie(uint64_t node_budget = kDefaultNodeBudget)
      : node_budget_(node_budget), nodes_(1) {}

  bool insert(const Solution& s) {
    uint32_t cur = 0;
    for (uint32_t i = 0; i < s.size(); ++i) {
      const int b = s.get(i) ? 1 : 0;
      uint32_t next = nodes_[cur].child[b];
      if (next == 0) {
        if (nodes_.size() >= node_budget_)
          throw StoreBudgetExceeded("solution trie exceeded " + std::to_string(node_budget_) +
                                    " nodes");
        next = static_cast<uint32_t>(nodes_.size());
        nodes_.emplace_back();
        nodes_[cur].child[b] = next;
      }
      cur = next;
    }
    if (nodes_[cur].terminal) return false;
    nodes_[cur].terminal = true;
    ++size_;
    return true;
  }

  bool contains(const Solution& s) const {
    uint32_t cur = 0;
    for (uint32_t i = 0; i < s.size(); ++i) {
      cur = nodes_[cur].child[s.get(i) ? 1 : 0];
      if (cur == 0) return false;
    }
    return nodes_[cur].terminal;
  }

  uint64_t size() const { return size_; }

  static constexpr uint64_t kDefaultNodeBudget = 1u << 26;

 private:
  struct Node {
    uint32_t child[2] = {0, 0};
    bool terminal = false;
  };
  uint64_t node_budget_;
  uint64_t size_ = 0;
  std::vector<Node> nodes_;
};

// Wrap a possibly-repeating machine so each distinct solution is emitted
// exactly once, in first-occurrence order, using a stored prefix tree.
Machine dedup_by_store(Machine inner, uint64_t node_budget = SolutionTrie::kDefaultNodeBudget);

// Space-frugal duplicate elimination: on each emission the run so far is
// re-simulated from the initial snapshot to decide whether the solution
// already appeared. Costs extra time instead of a store; requires snapshots.
Machine dedup_by_rerun(Machine inner);

}  // namespace enumkit
