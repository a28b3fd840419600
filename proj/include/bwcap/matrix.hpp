#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bwcap {

enum class ColumnKind { ones, v };

/// Square matrix, row-major, with an optional per-column shape tag.
///
/// The tag records which columns are (multiples of) the all-ones vector and
/// which are (multiples of) v; the permanent never reads it.
template <class T>
class StructuredMatrix {
 public:
  StructuredMatrix() = default;
  explicit StructuredMatrix(std::size_t n) : n_(n), entries_(n * n), kinds_(n, ColumnKind::v) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  // 1-indexed, like the rest of the library.
  T& operator()(std::size_t i, std::size_t j) { return entries_.at((i - 1) * n_ + (j - 1)); }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_.at((i - 1) * n_ + (j - 1)); }

  [[nodiscard]] ColumnKind column_kind(std::size_t j) const { return kinds_.at(j - 1); }
  void set_column_kind(std::size_t j, ColumnKind kind) { kinds_.at(j - 1) = kind; }

  /// Column j of the result is column perm[j-1] of this matrix (perm is 1-indexed values).
  [[nodiscard]] StructuredMatrix permuted_columns(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_) throw std::invalid_argument("column permutation has wrong length");
    StructuredMatrix out(n_);
    for (std::size_t j = 1; j <= n_; ++j) {
      for (std::size_t i = 1; i <= n_; ++i) out(i, j) = (*this)(i, perm[j - 1]);
      out.set_column_kind(j, column_kind(perm[j - 1]));
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> entries_;
  std::vector<ColumnKind> kinds_;
};

}  // namespace bwcap
