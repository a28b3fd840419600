#pragma once

// Words, their bargraphs, and the chessboard cell statistic.
//
// Column i (1-indexed) of the bargraph of u has height u_i. Cells are coloured
// like a chessboard whose south-western cell is black, so cell (i, y) with
// y = 1..h is black iff i + y is even.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bwcap/bigint.hpp"

namespace bwcap {

using Letter = std::uint32_t;

/// A finite sequence of letters >= 1. The empty word is valid.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Accepts either a run of digits ("152322") or comma separated integers ("10,2,3").
  static Word parse(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
  /// 1-indexed access, matching the position parity the statistic depends on.
  [[nodiscard]] Letter at(std::size_t position) const;

  [[nodiscard]] Letter max_letter() const noexcept;
  [[nodiscard]] bool is_kary(Letter k) const noexcept { return max_letter() <= k; }
  [[nodiscard]] bool is_permutation() const noexcept;

  [[nodiscard]] Word concat(const Word& tail) const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct CellCount {
  BigInt black;
  BigInt white;

  friend bool operator==(const CellCount&, const CellCount&) = default;
};

/// Black cells in column i of height h: ceil(h/2) for odd i, floor(h/2) for even i.
[[nodiscard]] std::uint64_t black_at(std::int64_t i, std::int64_t h);
[[nodiscard]] std::uint64_t white_at(std::int64_t i, std::int64_t h);

[[nodiscard]] CellCount cell_count(const Word& u);
[[nodiscard]] bool is_bw_balanced(const Word& u);

/// |{i : i - p_i odd}|. Throws UsageError unless p is a permutation of [n].
[[nodiscard]] std::uint64_t odd_displacements(const Word& p);

namespace detail {

struct RawCount {
  std::uint64_t black = 0;
  std::uint64_t white = 0;
};

// Unchecked fast path for the enumeration kernels. Letters must be >= 1.
inline RawCount raw_cell_count(std::span<const Letter> letters) noexcept {
  RawCount c;
  for (std::size_t idx = 0; idx < letters.size(); ++idx) {
    const std::uint64_t hi = (letters[idx] + 1u) / 2u;
    const std::uint64_t lo = letters[idx] / 2u;
    // idx is 0-based, so position idx+1 is odd iff idx is even.
    if ((idx & 1u) == 0) {
      c.black += hi;
      c.white += lo;
    } else {
      c.black += lo;
      c.white += hi;
    }
  }
  return c;
}

inline std::uint64_t raw_odd_displacements(std::span<const Letter> p) noexcept {
  std::uint64_t d = 0;
  for (std::size_t idx = 0; idx < p.size(); ++idx) d += ((idx + 1u) ^ p[idx]) & 1u;
  return d;
}

}  // namespace detail
}  // namespace bwcap
