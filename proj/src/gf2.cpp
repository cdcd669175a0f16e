#include "enumkit/gf2.hpp"

#include <random>
#include <string>

#include "enumkit/errors.hpp"

namespace enumkit {

Gf2System Gf2System::from_strings(const std::vector<std::string>& rows_with_rhs) {
  Gf2System s;
  s.rows = static_cast<uint32_t>(rows_with_rhs.size());
  s.cols = s.rows == 0 ? 0 : static_cast<uint32_t>(rows_with_rhs.front().size()) - 1;
  s.rhs = BitVec(s.rows);
  for (uint32_t r = 0; r < s.rows; ++r) {
    const std::string& line = rows_with_rhs[r];
    if (line.size() != s.cols + 1) throw ValidationError("ragged coefficient row");
    s.row_coeffs.push_back(BitVec::from_string(line.substr(0, s.cols)));
    if (line.back() == '1') s.rhs.set(r, true);
  }
  return s;
}

std::optional<Gf2Basis> gf2_basis(const Gf2System& sys) {
  std::vector<BitVec> rows = sys.row_coeffs;
  std::vector<uint8_t> rhs(sys.rows, 0);
  for (uint32_t r = 0; r < sys.rows; ++r) rhs[r] = sys.rhs.get(r);

  std::vector<int64_t> pivot_row_of_col(sys.cols, -1);
  uint32_t next_row = 0;
  for (uint32_t col = 0; col < sys.cols && next_row < sys.rows; ++col) {
    uint32_t pivot = next_row;
    while (pivot < sys.rows && !rows[pivot].get(col)) ++pivot;
    if (pivot == sys.rows) continue;
    std::swap(rows[pivot], rows[next_row]);
    std::swap(rhs[pivot], rhs[next_row]);
    for (uint32_t r = 0; r < sys.rows; ++r) {
      if (r != next_row && rows[r].get(col)) {
        rows[r] ^= rows[next_row];
        rhs[r] ^= rhs[next_row];
      }
    }
    pivot_row_of_col[col] = next_row;
    ++next_row;
  }
  for (uint32_t r = next_row; r < sys.rows; ++r)
    if (rhs[r]) return std::nullopt;  // 0 = 1

  Gf2Basis basis;
  basis.rank = next_row;
  basis.particular = BitVec(sys.cols);
  for (uint32_t col = 0; col < sys.cols; ++col)
    if (pivot_row_of_col[col] >= 0 && rhs[static_cast<size_t>(pivot_row_of_col[col])])
      basis.particular.set(col, true);
  for (uint32_t free_col = 0; free_col < sys.cols; ++free_col) {
    if (pivot_row_of_col[free_col] >= 0) continue;
    BitVec v(sys.cols);
    v.set(free_col, true);
    for (uint32_t col = 0; col < sys.cols; ++col) {
      const int64_t pr = pivot_row_of_col[col];
      if (pr >= 0 && rows[static_cast<size_t>(pr)].get(free_col)) v.set(col, true);
    }
    basis.kernel.push_back(std::move(v));
  }
  return basis;
}

std::optional<Solution> gf2_jth_solution(const Gf2Basis& basis, uint64_t j) {
  const size_t k = basis.kernel.size();
  if (k < 64 && j >= (uint64_t{1} << k)) return std::nullopt;
  Solution x = basis.particular;
  for (size_t i = 0; i < k; ++i) {
    if ((j >> (k - 1 - i)) & 1) x ^= basis.kernel[i];
  }
  return x;
}

std::vector<Solution> gf2_coefficient_order(const Gf2Basis& basis) {
  if (basis.kernel.size() > 20)
    throw InstanceTooLarge("kernel dimension above 20 cannot be materialized");
  std::vector<Solution> out;
  const uint64_t total = uint64_t{1} << basis.kernel.size();
  out.reserve(total);
  for (uint64_t j = 0; j < total; ++j) out.push_back(*gf2_jth_solution(basis, j));
  return out;
}

namespace {

class Gf2Enumerator final : public Enumerator {
 public:
  explicit Gf2Enumerator(std::optional<Gf2Basis> basis) : basis_(std::move(basis)) {
    if (basis_) {
      current_ = basis_->particular;
      if (basis_->kernel.size() > 62)
        throw InstanceTooLarge("kernel dimension above 62 cannot be enumerated");
      total_ = uint64_t{1} << basis_->kernel.size();
    }
  }

  StepOutcome step() override {
    if (!basis_ || emitted_ == total_) return StepOutcome::make_done();
    if (emitted_ > 0) {
      // Reflected-binary walk over the coefficient word: the coefficient
      // flipped between word i-1 and i is the lowest set bit of i.
      uint64_t i = emitted_;
      size_t flip = 0;
      while (!(i & 1)) {
        i >>= 1;
        ++flip;
      }
      current_ ^= basis_->kernel[flip];
    }
    ++emitted_;
    return StepOutcome::make_emit(current_);
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<Gf2Enumerator>(*this);
  }

 private:
  std::optional<Gf2Basis> basis_;
  Solution current_;
  uint64_t total_ = 0;
  uint64_t emitted_ = 0;
};

class Gf2Sampler final : public SolutionSampler {
 public:
  Gf2Sampler(std::optional<Gf2Basis> basis, uint64_t seed)
      : basis_(std::move(basis)), rng_(seed) {}

  std::optional<Solution> sample() override {
    if (!basis_) return std::nullopt;
    Solution x = basis_->particular;
    for (const BitVec& v : basis_->kernel) {
      if (rng_() & 1) x ^= v;
    }
    return x;
  }

  std::unique_ptr<SolutionSampler> clone() const override {
    return std::make_unique<Gf2Sampler>(*this);
  }

 private:
  std::optional<Gf2Basis> basis_;
  std::mt19937_64 rng_;
};

}  // namespace

Machine gf2_enumerate(const Gf2System& sys) {
  return Machine::make<Gf2Enumerator>(gf2_basis(sys));
}

std::optional<Solution> gf2_sample_uniform(const Gf2System& sys, uint64_t seed,
                                           uint64_t draw_index) {
  Gf2Sampler s(gf2_basis(sys), seed);
  std::optional<Solution> x;
  for (uint64_t i = 0; i <= draw_index; ++i) x = s.sample();
  return x;
}

std::unique_ptr<SolutionSampler> make_gf2_sampler(const Gf2System& sys, uint64_t seed) {
  return std::make_unique<Gf2Sampler>(gf2_basis(sys), seed);
}

}  // namespace enumkit
