#pragma once

#include <cstdint>

namespace bwcap {

/// Resource caps. Exceeding any of them raises BudgetError; nothing is truncated silently.
struct Budget {
  std::uint64_t max_words = 10'000'000;      // k^n for k-ary brute force
  std::uint32_t max_perm_n = 10;             // S_n brute force
  std::uint32_t max_permanent_scalar = 12;   // Ryser over rationals
  std::uint32_t max_permanent_poly = 9;      // Ryser over polynomials
  std::uint32_t exponent_cap = 512;          // total cells n*k of an enumerating polynomial
};

/// Worker-count hint for the OpenMP kernels. 1 selects the serial reference path.
struct Jobs {
  unsigned count = 1;
};

}  // namespace bwcap
