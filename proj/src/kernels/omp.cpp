// OpenMP kernels. Work is split into independent blocks (index ranges of
// [k]^n, permutation prefixes, ranges of Ryser subsets); each thread keeps a
// private accumulator and accumulators are merged by exact addition.

#include <omp.h>

#include <algorithm>
#include <bit>

#include "bwcap/kernels.hpp"
#include "enumerate.hpp"

namespace bwcap::kernels::omp {

using detail::max_column_cells;

namespace {

int threads(unsigned jobs) { return static_cast<int>(std::max(1u, jobs)); }

struct Blocks {
  std::uint64_t count;
  std::uint64_t size;
};

Blocks split(std::uint64_t total, unsigned jobs) {
  const std::uint64_t want = std::max<std::uint64_t>(1, std::uint64_t{jobs} * 16);
  const std::uint64_t size = std::max<std::uint64_t>(1, (total + want - 1) / want);
  return {(total + size - 1) / size, size};
}

template <class Acc, class MakeAcc, class Merge, class Visit>
Acc parallel_words(std::uint32_t k, std::uint32_t n, unsigned jobs, MakeAcc make, Merge merge, Visit visit) {
  const std::uint64_t total = detail::checked_power(k, n);
  const Blocks blocks = split(total, jobs);
  Acc result = make();
#pragma omp parallel num_threads(threads(jobs))
  {
    Acc local = make();
#pragma omp for schedule(dynamic)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks.count); ++blk) {
      const std::uint64_t begin = static_cast<std::uint64_t>(blk) * blocks.size;
      const std::uint64_t count = std::min(blocks.size, total - begin);
      detail::walk_words(k, n, begin, count, [&](std::span<const Letter> u) { visit(local, u); });
    }
#pragma omp critical(bwcap_merge_words)
    merge(result, local);
  }
  return result;
}

template <class Acc, class MakeAcc, class Merge, class Visit>
Acc parallel_permutations(std::uint32_t n, unsigned jobs, MakeAcc make, Merge merge, Visit visit) {
  const auto prefixes = detail::permutation_prefixes(n);
  Acc result = make();
#pragma omp parallel num_threads(threads(jobs))
  {
    Acc local = make();
#pragma omp for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(prefixes.size()); ++t) {
      detail::walk_permutations(n, prefixes[static_cast<std::size_t>(t)],
                                [&](std::span<const Letter> p) { visit(local, p); });
    }
#pragma omp critical(bwcap_merge_perms)
    merge(result, local);
  }
  return result;
}

void add_counts(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

}  // namespace

CellHistogram kary_cell_histogram(std::uint32_t k, std::uint32_t n, unsigned jobs) {
  const std::uint32_t dim = n * max_column_cells(k) + 1;
  return parallel_words<CellHistogram>(
      k, n, jobs, [dim] { return CellHistogram(dim, dim); },
      [](CellHistogram& into, const CellHistogram& from) { into.merge(from); },
      [dim](CellHistogram& h, std::span<const Letter> u) {
        const auto c = bwcap::detail::raw_cell_count(u);
        ++h.counts[c.black * dim + c.white];
      });
}

std::vector<std::uint64_t> kary_balanced_classes(std::uint32_t k, std::uint32_t n, unsigned jobs) {
  return parallel_words<std::vector<std::uint64_t>>(
      k, n, jobs, [n] { return std::vector<std::uint64_t>(n / 2 + 1, 0); }, add_counts,
      [](std::vector<std::uint64_t>& classes, std::span<const Letter> u) {
        const auto c = bwcap::detail::raw_cell_count(u);
        if (c.black == c.white) ++classes[detail::odd_letters_at_odd_positions(u)];
      });
}

CellHistogram perm_cell_histogram(std::uint32_t n, unsigned jobs) {
  const std::uint32_t dim = n * max_column_cells(n) + 1;
  return parallel_permutations<CellHistogram>(
      n, jobs, [dim] { return CellHistogram(dim, dim); },
      [](CellHistogram& into, const CellHistogram& from) { into.merge(from); },
      [dim](CellHistogram& h, std::span<const Letter> p) {
        const auto c = bwcap::detail::raw_cell_count(p);
        ++h.counts[c.black * dim + c.white];
      });
}

std::vector<std::uint64_t> perm_displacement_census(std::uint32_t n, unsigned jobs) {
  return parallel_permutations<std::vector<std::uint64_t>>(
      n, jobs, [n] { return std::vector<std::uint64_t>(n + 1, 0); }, add_counts,
      [](std::vector<std::uint64_t>& counts, std::span<const Letter> p) {
        ++counts[bwcap::detail::raw_odd_displacements(p)];
      });
}

BigRational ryser_permanent(const StructuredMatrix<BigRational>& a, unsigned jobs) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  const std::uint64_t steps = (std::uint64_t{1} << n) - 1;  // Gray-code steps 1..2^n-1
  const Blocks blocks = split(steps, jobs);
  BigRational total = 0;
#pragma omp parallel num_threads(threads(jobs))
  {
    BigRational local = 0;
    std::vector<BigRational> row_sums(n);
    BigRational prod;
#pragma omp for schedule(dynamic)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks.count); ++blk) {
      const std::uint64_t first = 1 + static_cast<std::uint64_t>(blk) * blocks.size;
      const std::uint64_t last = std::min(first + blocks.size - 1, steps);
      // Seed the row sums with the Gray code preceding this block.
      std::uint64_t gray = (first - 1) ^ ((first - 1) >> 1);
      for (std::size_t i = 0; i < n; ++i) {
        row_sums[i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if ((gray >> j) & 1u) row_sums[i] += a(i + 1, j + 1);
        }
      }
      for (std::uint64_t step = first; step <= last; ++step) {
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
          local += prod;
        } else {
          local -= prod;
        }
      }
    }
#pragma omp critical(bwcap_merge_ryser_scalar)
    total += local;
  }
  return n % 2 == 0 ? total : BigRational(-total);
}

BivariatePolynomial ryser_permanent(const StructuredMatrix<BivariatePolynomial>& a, unsigned jobs) {
  const std::size_t n = a.size();
  if (n == 0) return BivariatePolynomial(1);
  const std::int64_t subsets = std::int64_t{1} << n;
  BivariatePolynomial total;
#pragma omp parallel num_threads(threads(jobs))
  {
    BivariatePolynomial local;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t m = 1; m < subsets; ++m) {
      const auto mask = static_cast<std::uint64_t>(m);
      BivariatePolynomial prod(1);
      for (std::size_t i = 1; i <= n && !prod.is_zero(); ++i) {
        BivariatePolynomial row;
        for (std::size_t j = 0; j < n; ++j) {
          if ((mask >> j) & 1u) row += a(i, j + 1);
        }
        prod *= row;
      }
      if ((static_cast<std::size_t>(std::popcount(mask)) + n) % 2 == 0) {
        local += prod;
      } else {
        local -= prod;
      }
    }
#pragma omp critical(bwcap_merge_ryser_poly)
    total += local;
  }
  return total;
}

}  // namespace bwcap::kernels::omp
