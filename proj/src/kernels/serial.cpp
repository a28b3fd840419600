// Serial reference kernels. Straight loops, no partitioning.

#include <bit>

#include "bwcap/kernels.hpp"
#include "enumerate.hpp"

namespace bwcap::kernels::serial {

using detail::max_column_cells;

CellHistogram kary_cell_histogram(std::uint32_t k, std::uint32_t n) {
  const std::uint32_t dim = n * max_column_cells(k) + 1;
  CellHistogram hist(dim, dim);
  detail::walk_words(k, n, 0, detail::checked_power(k, n), [&](std::span<const Letter> u) {
    const auto c = bwcap::detail::raw_cell_count(u);
    ++hist.counts[c.black * dim + c.white];
  });
  return hist;
}

std::vector<std::uint64_t> kary_balanced_classes(std::uint32_t k, std::uint32_t n) {
  std::vector<std::uint64_t> classes(n / 2 + 1, 0);
  detail::walk_words(k, n, 0, detail::checked_power(k, n), [&](std::span<const Letter> u) {
    const auto c = bwcap::detail::raw_cell_count(u);
    if (c.black == c.white) ++classes[detail::odd_letters_at_odd_positions(u)];
  });
  return classes;
}

CellHistogram perm_cell_histogram(std::uint32_t n) {
  const std::uint32_t dim = n * max_column_cells(n) + 1;
  CellHistogram hist(dim, dim);
  for (const auto& prefix : detail::permutation_prefixes(n)) {
    detail::walk_permutations(n, prefix, [&](std::span<const Letter> p) {
      const auto c = bwcap::detail::raw_cell_count(p);
      ++hist.counts[c.black * dim + c.white];
    });
  }
  return hist;
}

std::vector<std::uint64_t> perm_displacement_census(std::uint32_t n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const auto& prefix : detail::permutation_prefixes(n)) {
    detail::walk_permutations(n, prefix,
                              [&](std::span<const Letter> p) { ++counts[bwcap::detail::raw_odd_displacements(p)]; });
  }
  return counts;
}

BigRational ryser_permanent(const StructuredMatrix<BigRational>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, S walked in Gray-code order.
  std::vector<BigRational> row_sums(n, 0);
  BigRational total = 0;
  BigRational prod;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const unsigned col = static_cast<unsigned>(std::countr_zero(step));
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1u;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += a(i + 1, col + 1);
      } else {
        row_sums[i] -= a(i + 1, col + 1);
      }
    }
    prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sums[i];
    if (std::popcount(gray) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return n % 2 == 0 ? total : BigRational(-total);
}

BivariatePolynomial ryser_permanent(const StructuredMatrix<BivariatePolynomial>& a) {
  const std::size_t n = a.size();
  if (n == 0) return BivariatePolynomial(1);
  BivariatePolynomial total;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    BivariatePolynomial prod(1);
    for (std::size_t i = 1; i <= n && !prod.is_zero(); ++i) {
      BivariatePolynomial row;
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1u) row += a(i, j + 1);
      }
      prod *= row;
    }
    if ((static_cast<std::size_t>(std::popcount(mask)) + n) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

}  // namespace bwcap::kernels::serial
