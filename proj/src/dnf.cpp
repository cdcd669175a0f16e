#include "enumkit/dnf.hpp"

#include <memory>
#include <string>

#include "enumkit/errors.hpp"
#include "enumkit/flashlight.hpp"

namespace enumkit {

DnfFormula DnfFormula::from_signed(uint32_t n, const std::vector<std::vector<int>>& signed_terms) {
  DnfFormula d;
  d.n = n;
  d.terms.reserve(signed_terms.size());
  for (const auto& st : signed_terms) {
    std::vector<Literal> term;
    term.reserve(st.size());
    for (int lit : st) {
      if (lit == 0 || static_cast<uint32_t>(lit < 0 ? -lit : lit) > n)
        throw ValidationError("literal " + std::to_string(lit) + " out of range");
      term.push_back({static_cast<uint32_t>(lit < 0 ? -lit : lit), lit > 0});
    }
    d.terms.push_back(std::move(term));
  }
  return d;
}

namespace {

// Alive-term bookkeeping: a term dies when the prefix fixes one of its
// variables against it. With per-variable counts of alive demands, the
// extension test "does any term survive prefix+bit" is one comparison, and a
// term is touched only when it dies or revives.
class DnfPartitionProblem final : public BinaryPartitionProblem {
 public:
  explicit DnfPartitionProblem(DnfFormula d) : d_(std::move(d)) {
    demand_pos_.assign(d_.n + 1, 0);
    demand_neg_.assign(d_.n + 1, 0);
    by_var_.assign(d_.n + 1, {});
    alive_.assign(d_.terms.size(), 1);
    alive_count_ = d_.terms.size();
    for (size_t t = 0; t < d_.terms.size(); ++t) {
      for (const Literal& lit : d_.terms[t]) {
        if (lit.variable == 0 || lit.variable > d_.n)
          throw ValidationError("literal variable out of range");
        by_var_[lit.variable].push_back({static_cast<uint32_t>(t), lit.positive});
        ++(lit.positive ? demand_pos_ : demand_neg_)[lit.variable];
      }
    }
  }

  uint32_t ground_size() const override { return d_.n; }

  bool root_extendable() override { return alive_count_ > 0; }

  bool extendable_with(const PartialSolution& current, bool bit) override {
    const uint32_t var = current.decided() + 1;
    const uint64_t against = bit ? demand_neg_[var] : demand_pos_[var];
    return alive_count_ > against;
  }

  void push(const PartialSolution& current, bool bit) override {
    const uint32_t var = current.decided() + 1;
    undo_.push_back({});
    std::vector<uint32_t>& killed = undo_.back();
    for (const auto& [t, positive] : by_var_[var]) {
      if (positive == bit || !alive_[t]) continue;
      alive_[t] = 0;
      --alive_count_;
      killed.push_back(t);
      for (const Literal& lit : d_.terms[t])
        --(lit.positive ? demand_pos_ : demand_neg_)[lit.variable];
    }
  }

  void pop() override {
    for (uint32_t t : undo_.back()) {
      alive_[t] = 1;
      ++alive_count_;
      for (const Literal& lit : d_.terms[t])
        ++(lit.positive ? demand_pos_ : demand_neg_)[lit.variable];
    }
    undo_.pop_back();
  }

  bool is_solution(const Solution& full) const override { return d_.evaluate(full); }

  std::unique_ptr<BinaryPartitionProblem> clone() const override {
    return std::make_unique<DnfPartitionProblem>(*this);
  }

 private:
  struct VarUse {
    uint32_t term;
    bool positive;
  };
  DnfFormula d_;
  std::vector<std::vector<VarUse>> by_var_;
  std::vector<uint8_t> alive_;
  uint64_t alive_count_ = 0;
  std::vector<uint64_t> demand_pos_;
  std::vector<uint64_t> demand_neg_;
  std::vector<std::vector<uint32_t>> undo_;
};

}  // namespace

Machine dnf_enumerate(const DnfFormula& d) {
  for (const auto& term : d.terms) {
    std::vector<uint8_t> seen(d.n + 1, 0);
    for (const Literal& lit : term) {
      if (seen[lit.variable])
        throw ValidationError("term mentions variable " + std::to_string(lit.variable) +
                              " twice");
      seen[lit.variable] = 1;
    }
  }
  return flashlight_enumerate(std::make_unique<DnfPartitionProblem>(d));
}

}  // namespace enumkit
