#pragma once

// Word and permutation walkers shared by the serial and OpenMP kernels.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bwcap/bargraph.hpp"

namespace bwcap::kernels::detail {

inline std::uint64_t checked_power(std::uint64_t k, std::uint32_t n) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (k != 0 && total > UINT64_MAX / k) throw std::overflow_error("k^n overflows 64 bits");
    total *= k;
  }
  return total;
}

/// Visits words index..index+count-1 of [k]^n in lexicographic order, where
/// index is read as an n-digit base-k number, most significant letter first.
template <class Visit>
void walk_words(std::uint32_t k, std::uint32_t n, std::uint64_t index, std::uint64_t count, Visit&& visit) {
  if (count == 0) return;
  std::vector<Letter> word(n, 1);
  for (std::uint32_t pos = n; pos-- > 0;) {
    word[pos] = static_cast<Letter>(index % k) + 1;
    index /= k;
  }
  for (std::uint64_t step = 0;; ) {
    visit(std::span<const Letter>(word));
    if (++step == count) return;
    std::uint32_t pos = n;
    while (pos > 0) {
      --pos;
      if (word[pos] < k) {
        ++word[pos];
        break;
      }
      word[pos] = 1;
    }
  }
}

/// The permutation prefixes a block of S_n is keyed by: every (first, second)
/// pair for n >= 2, otherwise the single empty prefix.
inline std::vector<std::vector<Letter>> permutation_prefixes(std::uint32_t n) {
  std::vector<std::vector<Letter>> out;
  if (n < 2) {
    out.emplace_back();
    return out;
  }
  for (Letter a = 1; a <= n; ++a) {
    for (Letter b = 1; b <= n; ++b) {
      if (a != b) out.push_back({a, b});
    }
  }
  return out;
}

/// Visits, in lexicographic order, every permutation of [n] starting with prefix.
template <class Visit>
void walk_permutations(std::uint32_t n, const std::vector<Letter>& prefix, Visit&& visit) {
  std::vector<Letter> perm = prefix;
  std::vector<bool> used(n + 1, false);
  for (Letter x : prefix) used[x] = true;
  for (Letter x = 1; x <= n; ++x) {
    if (!used[x]) perm.push_back(x);
  }
  const auto tail = perm.begin() + static_cast<std::ptrdiff_t>(prefix.size());
  do {
    visit(std::span<const Letter>(perm));
  } while (std::next_permutation(tail, perm.end()));
}

inline std::uint32_t odd_letters_at_odd_positions(std::span<const Letter> u) {
  std::uint32_t r = 0;
  for (std::size_t idx = 0; idx < u.size(); idx += 2) r += u[idx] & 1u;
  return r;
}

inline std::uint32_t max_column_cells(std::uint32_t k) { return (k + 1) / 2; }

}  // namespace bwcap::kernels::detail
