#pragma once

// Enumeration and permanent kernels.
//
// Every kernel exists twice: a plain serial reference and an OpenMP version
// that partitions the work and merges by exact addition. Both must return
// identical results for every input; the tests and the benchmark compare them.

#include <cstdint>
#include <vector>

#include "bwcap/bigint.hpp"
#include "bwcap/matrix.hpp"
#include "bwcap/polynomial.hpp"

namespace bwcap::kernels {

/// Dense (black, white) -> count histogram.
struct CellHistogram {
  std::uint32_t black_dim = 0;
  std::uint32_t white_dim = 0;
  std::vector<std::uint64_t> counts;  // counts[black * white_dim + white]

  CellHistogram() = default;
  CellHistogram(std::uint32_t bdim, std::uint32_t wdim)
      : black_dim(bdim), white_dim(wdim), counts(std::size_t{bdim} * wdim, 0) {}
  void merge(const CellHistogram& other);
  [[nodiscard]] BivariatePolynomial to_polynomial() const;
  friend bool operator==(const CellHistogram&, const CellHistogram&) = default;
};

namespace serial {
CellHistogram kary_cell_histogram(std::uint32_t k, std::uint32_t n);
/// Balanced k-ary words bucketed by the number of odd letters at odd positions.
std::vector<std::uint64_t> kary_balanced_classes(std::uint32_t k, std::uint32_t n);
CellHistogram perm_cell_histogram(std::uint32_t n);
/// counts[d] = number of permutations of [n] with d odd displacements.
std::vector<std::uint64_t> perm_displacement_census(std::uint32_t n);
BigRational ryser_permanent(const StructuredMatrix<BigRational>& a);
BivariatePolynomial ryser_permanent(const StructuredMatrix<BivariatePolynomial>& a);
}  // namespace serial

namespace omp {
CellHistogram kary_cell_histogram(std::uint32_t k, std::uint32_t n, unsigned jobs);
std::vector<std::uint64_t> kary_balanced_classes(std::uint32_t k, std::uint32_t n, unsigned jobs);
CellHistogram perm_cell_histogram(std::uint32_t n, unsigned jobs);
std::vector<std::uint64_t> perm_displacement_census(std::uint32_t n, unsigned jobs);
BigRational ryser_permanent(const StructuredMatrix<BigRational>& a, unsigned jobs);
BivariatePolynomial ryser_permanent(const StructuredMatrix<BivariatePolynomial>& a, unsigned jobs);
}  // namespace omp

}  // namespace bwcap::kernels
