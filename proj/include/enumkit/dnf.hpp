#pragma once

#include <cstdint>
#include <vector>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// A literal: 1-based variable index with polarity.
struct Literal {
  uint32_t variable;
  bool positive;
};

// Disjunctive normal form: a disjunction of terms, each a consistent set of
// literals (no variable twice in a term). Terms may repeat across the list.
struct DnfFormula {
  uint32_t n = 0;                            // variable count
  std::vector<std::vector<Literal>> terms;

  // Total literal count, the size ||D||.
  uint64_t size() const {
    uint64_t s = 0;
    for (const auto& t : terms) s += t.size();
    return s;
  }

  size_t m() const { return terms.size(); }

  bool evaluate(const Solution& assignment) const {
    for (const auto& term : terms) {
      bool sat = true;
      for (const Literal& lit : term) {
        if (assignment.get(lit.variable - 1) != lit.positive) {
          sat = false;
          break;
        }
      }
      if (sat) return true;
    }
    return false;
  }

  // Convenience: term from signed 1-based literals (DIMACS polarity).
  static DnfFormula from_signed(uint32_t n, const std::vector<std::vector<int>>& signed_terms);
};

// Backtracking model enumeration over the variable order 1..n. The extension
// oracle maintains the terms consistent with the prefix incrementally, so one
// oracle call costs O(1) and the work of discarding terms along a branch is
// bounded by the formula size. Models come out in lexicographic order.
Machine dnf_enumerate(const DnfFormula& d);

}  // namespace enumkit
