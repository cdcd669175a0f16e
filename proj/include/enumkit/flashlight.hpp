#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// A prefix of binary decisions over positions 1..n, the node of the
// backtracking tree. Position 0 is decided first.
class PartialSolution {
 public:
  PartialSolution() = default;
  explicit PartialSolution(uint32_t ground_size) : bits_(ground_size) {}

  uint32_t decided() const { return decided_; }
  uint32_t ground_size() const { return bits_.size(); }
  bool bit(uint32_t i) const { return bits_.get(i); }

  void push_back(bool v) {
    bits_.set(decided_, v);
    ++decided_;
  }

  void pop_back() {
    --decided_;
    bits_.set(decided_, false);
  }

  // Positions decided to 1 / to 0, as masks over the full ground set.
  BitVec ones_mask() const { return bits_; }
  BitVec zeros_mask() const {
    BitVec z(bits_.size());
    for (uint32_t i = 0; i < decided_; ++i)
      if (!bits_.get(i)) z.set(i, true);
    return z;
  }

  Solution to_solution() const { return bits_; }

 private:
  uint32_t decided_ = 0;
  BitVec bits_;
};

// The binary-partition search contract: an extension oracle over prefixes of
// candidate bit vectors plus an independent final solution predicate. The
// driver keeps the current prefix and mirrors every decision through
// push/pop, so oracles may answer either statelessly from the prefix argument
// or from incrementally maintained state.
//
// Required consistency: if a complete vector is a solution, the oracle
// accepts every prefix of it; a complete prefix the oracle accepts must pass
// is_solution, otherwise the driver raises OracleInconsistent.
class BinaryPartitionProblem {
 public:
  virtual ~BinaryPartitionProblem() = default;

  virtual uint32_t ground_size() const = 0;

  // Does any solution exist at all (extension test for the empty prefix)?
  virtual bool root_extendable() = 0;

  // Extension test for (current prefix) + bit.
  virtual bool extendable_with(const PartialSolution& current, bool bit) = 0;

  // The driver fixed position current.decided() to `bit`.
  virtual void push(const PartialSolution& current, bool bit) { (void)current, (void)bit; }
  virtual void pop() {}

  virtual bool is_solution(const Solution& full) const = 0;

  // Logical steps one oracle call is worth, for delay accounting.
  virtual uint64_t oracle_cost() const { return 1; }

  virtual std::unique_ptr<BinaryPartitionProblem> clone() const = 0;
};

struct FlashlightStats {
  uint64_t oracle_calls = 0;
  uint64_t nodes_expanded = 0;  // internal nodes whose children were tested
};

// Depth-first traversal of the prefix tree, branch 0 before branch 1, both
// children tested before any descent so empty subtrees are never entered.
// Emits exactly the solution set in lexicographic order.
Machine flashlight_enumerate(std::unique_ptr<BinaryPartitionProblem> problem);

const FlashlightStats* flashlight_stats(const Machine& m);

// Flashlight search whose emissions are buffered behind the longest
// root-to-leaf segment and then geometrically amortized, trading the raw
// delay (up to one full path per output) for O(avg_delay * log #solutions).
// `avg_delay_bound` is the incremental budget per solution; when absent it is
// measured on a calibration run of the same search. PathTimeExceeded reports
// a violated `path_time_bound`.
Machine flashlight_with_path_amortization(std::unique_ptr<BinaryPartitionProblem> problem,
                                          uint64_t path_time_bound,
                                          std::optional<uint64_t> avg_delay_bound = std::nullopt);

}  // namespace enumkit
