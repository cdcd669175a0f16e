#include "enumkit/set_system.hpp"

#include <cassert>
#include <unordered_set>
#include <vector>

#include "enumkit/flashlight.hpp"

namespace enumkit {

bool union_extension(const SetSystem& x, const BitVec& a, const BitVec& b) {
  assert(!(a & b).any());
  BitVec reach(x.n);
  for (const BitVec& s : x.sets)
    if (!s.intersects(b)) reach |= s;
  return a.is_subset_of(reach);
}

bool union_closure_member(const SetSystem& x, const BitVec& y) {
  BitVec covered(x.n);
  bool any_inside = false;
  for (const BitVec& s : x.sets) {
    if (s.is_subset_of(y)) {
      covered |= s;
      any_inside = true;
    }
  }
  return any_inside && covered == y;
}

namespace {

// Stateless oracle for the union closure. The plain containment test accepts
// the empty extension as well, so membership of at least one surviving set is
// required on top; that makes the oracle exact on complete prefixes (the
// all-zero vector is a solution only when some member set is empty).
class UnionPartitionProblem final : public BinaryPartitionProblem {
 public:
  explicit UnionPartitionProblem(SetSystem x) : x_(std::move(x)) {}

  uint32_t ground_size() const override { return x_.n; }

  bool root_extendable() override { return !x_.sets.empty(); }

  bool extendable_with(const PartialSolution& current, bool bit) override {
    const uint32_t pos = current.decided();
    BitVec in = current.ones_mask();
    BitVec out = current.zeros_mask();
    (bit ? in : out).set(pos, true);
    BitVec reach(x_.n);
    bool alive = false;
    for (const BitVec& s : x_.sets) {
      if (!s.intersects(out)) {
        reach |= s;
        alive = true;
      }
    }
    return alive && in.is_subset_of(reach);
  }

  bool is_solution(const Solution& full) const override {
    return union_closure_member(x_, full);
  }

  std::unique_ptr<BinaryPartitionProblem> clone() const override {
    return std::make_unique<UnionPartitionProblem>(*this);
  }

 private:
  SetSystem x_;
};

class UnionSupergraph final : public Enumerator {
 public:
  UnionSupergraph(SetSystem x, uint64_t store_budget)
      : x_(std::move(x)), visited_(store_budget) {
    BitVec empty(x_.n);
    visited_.insert(empty);
    stack_.push_back({empty, 0});
  }

  StepOutcome step() override {
    if (!start_handled_) {
      start_handled_ = true;
      // The start vertex is a genuine solution only when a member set is empty.
      for (const BitVec& s : x_.sets)
        if (s.none()) return StepOutcome::make_emit(BitVec(x_.n));
      return StepOutcome::make_continue();
    }
    if (stack_.empty()) return StepOutcome::make_done();
    Node& node = stack_.back();
    if (node.next_arc >= x_.sets.size()) {
      stack_.pop_back();
      return StepOutcome::make_continue();
    }
    BitVec z = node.vertex | x_.sets[node.next_arc];
    ++node.next_arc;
    if (z == node.vertex) return StepOutcome::make_continue();
    if (!visited_.insert(z)) return StepOutcome::make_continue();
    stack_.push_back({z, 0});
    return StepOutcome::make_emit(std::move(z));
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<UnionSupergraph>(*this);
  }

 private:
  struct Node {
    BitVec vertex;
    size_t next_arc;
  };
  SetSystem x_;
  SolutionTrie visited_;
  std::vector<Node> stack_;
  bool start_handled_ = false;
};

}  // namespace

ParentResult union_parent(const SetSystem& x, const BitVec& z) {
  ParentResult r;
  BitVec prefix_union(x.n);
  for (size_t k = 0; k < x.sets.size(); ++k) {
    if (!x.sets[k].is_subset_of(z)) continue;
    if ((prefix_union | x.sets[k]) == z) {
      r.in_closure = true;
      r.is_root = prefix_union.none();
      r.parent = std::move(prefix_union);
      return r;
    }
    prefix_union |= x.sets[k];
  }
  return r;  // not reachable as a union of member sets
}

namespace {

// DFS over the parent-rule forest. Children of y are the vertices y ∪ s_i
// whose parent is y, visited through their smallest generating index only.
class UnionReverseSearch final : public Enumerator {
 public:
  explicit UnionReverseSearch(SetSystem x) : x_(std::move(x)) {}

  StepOutcome step() override {
    if (done_) return StepOutcome::make_done();
    if (stack_.empty()) {
      // Root scan: distinct member sets that the parent rule marks as roots.
      while (root_cursor_ < x_.sets.size()) {
        const size_t i = root_cursor_++;
        if (duplicated_earlier(i)) continue;
        ParentResult pr = union_parent(x_, x_.sets[i]);
        if (pr.in_closure && pr.is_root) {
          stack_.push_back({x_.sets[i], 0});
          return StepOutcome::make_emit(x_.sets[i]);
        }
      }
      done_ = true;
      return StepOutcome::make_done();
    }
    Node& node = stack_.back();
    if (node.next_arc >= x_.sets.size()) {
      stack_.pop_back();
      return StepOutcome::make_continue();
    }
    const size_t i = node.next_arc++;
    BitVec child = node.vertex | x_.sets[i];
    if (child == node.vertex) return StepOutcome::make_continue();
    // Enter each child through the smallest index generating it.
    for (size_t j = 0; j < i; ++j)
      if ((node.vertex | x_.sets[j]) == child) return StepOutcome::make_continue();
    ParentResult pr = union_parent(x_, child);
    if (!pr.in_closure || pr.is_root || pr.parent != node.vertex)
      return StepOutcome::make_continue();
    stack_.push_back({child, 0});
    return StepOutcome::make_emit(std::move(child));
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<UnionReverseSearch>(*this);
  }

 private:
  bool duplicated_earlier(size_t i) const {
    for (size_t j = 0; j < i; ++j)
      if (x_.sets[j] == x_.sets[i]) return true;
    return false;
  }

  struct Node {
    BitVec vertex;
    size_t next_arc;
  };
  SetSystem x_;
  std::vector<Node> stack_;
  size_t root_cursor_ = 0;
  bool done_ = false;
};

// Pair-scan saturation. known_[i] op known_[j] is evaluated one pair per
// step, i growing as new elements are appended, so the k-th solution appears
// within O(k^2) combination steps.
class SaturationEnumerator final : public Enumerator {
 public:
  SaturationEnumerator(SetSystem x, ClosureOperator op, uint64_t store_budget)
      : op_(op), store_budget_(store_budget) {
    // Intersection is union on complements, complemented again on output.
    if (op_ == ClosureOperator::Intersection)
      for (BitVec& s : x.sets) s = s.complement();
    x_ = std::move(x);
  }

  StepOutcome step() override {
    if (seed_cursor_ < x_.sets.size()) {
      const BitVec& s = x_.sets[seed_cursor_++];
      if (seen_.insert(s)) {
        known_.push_back(s);
        return emit(s);
      }
      return StepOutcome::make_continue();
    }
    while (i_ < known_.size()) {
      if (j_ > i_) {
        j_ = 0;
        ++i_;
        continue;
      }
      BitVec y = known_[i_] | known_[j_];
      ++j_;
      if (seen_.insert(y)) {
        if (known_.size() >= store_budget_)
          throw StoreBudgetExceeded("saturation pool exceeded " +
                                    std::to_string(store_budget_) + " solutions");
        known_.push_back(y);
        return emit(y);
      }
      return StepOutcome::make_continue();
    }
    return StepOutcome::make_done();
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<SaturationEnumerator>(*this);
  }

 private:
  StepOutcome emit(const BitVec& y) const {
    return StepOutcome::make_emit(op_ == ClosureOperator::Intersection ? y.complement() : y);
  }

  SetSystem x_;
  ClosureOperator op_;
  uint64_t store_budget_;
  SolutionTrie seen_;
  std::vector<BitVec> known_;
  size_t seed_cursor_ = 0;
  size_t i_ = 0;
  size_t j_ = 0;
};

}  // namespace

Machine union_flashlight(const SetSystem& x) {
  return flashlight_enumerate(std::make_unique<UnionPartitionProblem>(x));
}

Machine union_supergraph(const SetSystem& x, uint64_t store_budget) {
  return Machine::make<UnionSupergraph>(x, store_budget);
}

Machine union_reverse_search(const SetSystem& x) {
  return Machine::make<UnionReverseSearch>(x);
}

Machine closure_saturate(const SetSystem& x, ClosureOperator op, uint64_t store_budget) {
  return Machine::make<SaturationEnumerator>(x, op, store_budget);
}

}  // namespace enumkit
