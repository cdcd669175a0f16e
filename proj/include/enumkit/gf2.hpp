#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "enumkit/amortize.hpp"
#include "enumkit/enumerator.hpp"

namespace enumkit {

// Linear system A x = b over GF(2): r rows of n coefficients plus the
// right-hand side bit per row.
struct Gf2System {
  uint32_t rows = 0;
  uint32_t cols = 0;
  std::vector<BitVec> row_coeffs;  // each of length cols
  BitVec rhs;                      // length rows

  static Gf2System from_strings(const std::vector<std::string>& rows_with_rhs);
};

// Solved form: a particular solution plus a kernel basis, one vector per free
// column in column order. The solution set is particular + span(kernel),
// 2^kernel.size() vectors.
struct Gf2Basis {
  BitVec particular;
  std::vector<BitVec> kernel;
  uint32_t rank = 0;

  uint32_t kernel_dim() const { return static_cast<uint32_t>(kernel.size()); }

  // Number of solutions, or nullopt when it exceeds 2^63.
  std::optional<uint64_t> count() const {
    if (kernel.size() > 63) return std::nullopt;
    return uint64_t{1} << kernel.size();
  }
};

// Gauss-Jordan elimination. nullopt on an inconsistent system (no solution).
std::optional<Gf2Basis> gf2_basis(const Gf2System& sys);

// Random access: the j-th solution under the coefficient order where j's
// k-bit big-endian expansion gives the kernel combination. nullopt when
// j >= 2^k.
std::optional<Solution> gf2_jth_solution(const Gf2Basis& basis, uint64_t j);

// The full lexicographic-by-coefficients listing that gf2_jth_solution
// indexes into (kernel dimension at most 20).
std::vector<Solution> gf2_coefficient_order(const Gf2Basis& basis);

// Enumerates all solutions, one kernel-vector addition per output (the
// coefficient word walks a reflected binary code), delay linear in the
// solution length. Inconsistent systems give the empty enumeration.
Machine gf2_enumerate(const Gf2System& sys);

// Exactly uniform draw from the solution set; nullopt iff the set is empty.
std::optional<Solution> gf2_sample_uniform(const Gf2System& sys, uint64_t seed,
                                           uint64_t draw_index = 0);

// Sampler object for the sampler-to-enumerator pipeline.
std::unique_ptr<SolutionSampler> make_gf2_sampler(const Gf2System& sys, uint64_t seed);

}  // namespace enumkit
