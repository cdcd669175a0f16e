#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace enumkit {

// Fixed-length bit vector. Position 0 is the most significant position for
// comparisons, so operator< is the lexicographic order on bit strings.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(uint32_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVec from_string(const std::string& s) {
    BitVec v(static_cast<uint32_t>(s.size()));
    for (uint32_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') v.set(i, true);
    }
    return v;
  }

  // 1-based element list -> characteristic vector of length n.
  static BitVec from_elements(uint32_t n, const std::vector<int>& elems) {
    BitVec v(n);
    for (int e : elems) {
      assert(e >= 1 && static_cast<uint32_t>(e) <= n);
      v.set(static_cast<uint32_t>(e - 1), true);
    }
    return v;
  }

  uint32_t size() const { return size_; }

  bool get(uint32_t pos) const {
    assert(pos < size_);
    return (words_[pos >> 6] >> shift(pos)) & 1u;
  }

  void set(uint32_t pos, bool value) {
    assert(pos < size_);
    const uint64_t mask = uint64_t{1} << shift(pos);
    if (value)
      words_[pos >> 6] |= mask;
    else
      words_[pos >> 6] &= ~mask;
  }

  void flip(uint32_t pos) {
    assert(pos < size_);
    words_[pos >> 6] ^= uint64_t{1} << shift(pos);
  }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w != 0) return true;
    return false;
  }

  bool none() const { return !any(); }

  BitVec& operator|=(const BitVec& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  BitVec& operator&=(const BitVec& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  BitVec& operator^=(const BitVec& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  BitVec complement() const {
    BitVec r = *this;
    for (auto& w : r.words_) w = ~w;
    r.clear_tail();
    return r;
  }

  bool intersects(const BitVec& o) const {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const BitVec& o) const {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

  // Lexicographic on bit strings; shorter vectors compare by prefix rule.
  friend bool operator<(const BitVec& a, const BitVec& b) {
    const size_t common = std::min(a.words_.size(), b.words_.size());
    for (size_t i = 0; i < common; ++i) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return a.size_ < b.size_;
  }

  uint32_t hamming_distance(const BitVec& o) const {
    assert(size_ == o.size_);
    uint32_t d = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      d += static_cast<uint32_t>(std::popcount(words_[i] ^ o.words_[i]));
    return d;
  }

  // 0-based positions of set bits, ascending.
  std::vector<uint32_t> one_positions() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < size_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

  // 1-based sorted element list (the canonical set view).
  std::vector<int> elements() const {
    std::vector<int> out;
    for (uint32_t i = 0; i < size_; ++i)
      if (get(i)) out.push_back(static_cast<int>(i) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (uint32_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  static BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec r(a.size_ + b.size_);
    for (uint32_t i = 0; i < a.size_; ++i)
      if (a.get(i)) r.set(i, true);
    for (uint32_t i = 0; i < b.size_; ++i)
      if (b.get(i)) r.set(a.size_ + i, true);
    return r;
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull ^ size_;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }

 private:
  // Bit `pos` lives at a descending in-word offset so that word-wise integer
  // comparison equals lexicographic comparison of the bit string.
  static uint32_t shift(uint32_t pos) { return 63 - (pos & 63); }

  void clear_tail() {
    const uint32_t used = size_ & 63;
    if (used != 0 && !words_.empty()) {
      words_.back() &= ~uint64_t{0} << (64 - used);
    }
  }

  uint32_t size_ = 0;
  std::vector<uint64_t> words_;
};

// A solution in canonical form: a fixed-length bit vector, position 0 most
// significant, interconvertible with the sorted element list view.
using Solution = BitVec;

}  // namespace enumkit

template <>
struct std::hash<enumkit::BitVec> {
  size_t operator()(const enumkit::BitVec& v) const noexcept { return v.hash(); }
};
