#include "enumkit/gray.hpp"

#include <vector>

#include "enumkit/errors.hpp"

namespace enumkit {
namespace {

// Set bits are threaded through prev_/next_ arrays indexed by 1-based
// position, with 0 and n+1 as sentinels, so inserting or removing the bit at
// or next to the rightmost one is constant time.
class GrayCodeEnumerator final : public Enumerator {
 public:
  explicit GrayCodeEnumerator(uint32_t n) : n_(n), word_(n) {
    if (n == 0 || n > 62) throw ValidationError("word length must be in 1..62");
    total_ = uint64_t{1} << n;
    prev_.assign(n + 2, 0);
    next_.assign(n + 2, 0);
    present_.assign(n + 2, 0);
    next_[0] = n + 1;
    prev_[n + 1] = 0;
  }

  StepOutcome step() override {
    if (emitted_ == total_) return StepOutcome::make_done();
    if (emitted_ > 0) {
      if (ones_even_)
        flip(n_);
      else
        flip(rightmost_one() - 1);
    }
    ++emitted_;
    return StepOutcome::make_emit(word_);
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<GrayCodeEnumerator>(*this);
  }

 private:
  uint32_t rightmost_one() const { return prev_[n_ + 1]; }

  void flip(uint32_t pos) {
    if (present_[pos]) {
      next_[prev_[pos]] = next_[pos];
      prev_[next_[pos]] = prev_[pos];
      present_[pos] = 0;
      word_.set(pos - 1, false);
    } else {
      // pos is either n (successor: the sentinel) or directly left of the
      // rightmost one (successor: that one), so no scan is needed.
      const uint32_t succ = pos == n_ ? n_ + 1 : pos + 1;
      next_[pos] = succ;
      prev_[pos] = prev_[succ];
      next_[prev_[succ]] = pos;
      prev_[succ] = pos;
      present_[pos] = 1;
      word_.set(pos - 1, true);
    }
    ones_even_ = !ones_even_;
  }

  uint32_t n_;
  BitVec word_;
  uint64_t total_ = 0;
  uint64_t emitted_ = 0;
  bool ones_even_ = true;
  std::vector<uint32_t> prev_, next_, present_;
};

}  // namespace

Machine gray_code(uint32_t n) { return Machine::make<GrayCodeEnumerator>(n); }

}  // namespace enumkit
