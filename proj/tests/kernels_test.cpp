#include "bwcap/kernels.hpp"

#include <gtest/gtest.h>

#include "bwcap/perm.hpp"
#include "support/oracles.hpp"

namespace bwcap::kernels {
namespace {

constexpr unsigned kJobCounts[] = {1, 2, 3, 8};

TEST(KernelsTest, KaryHistogramSerialVsParallel) {
  for (std::uint32_t k = 1; k <= 5; ++k) {
    for (std::uint32_t n = 0; n <= 7; ++n) {
      const auto ref = serial::kary_cell_histogram(k, n);
      for (unsigned jobs : kJobCounts) ASSERT_EQ(omp::kary_cell_histogram(k, n, jobs), ref) << k << "," << n << "," << jobs;
    }
  }
}

TEST(KernelsTest, KaryClassesSerialVsParallel) {
  for (std::uint32_t k = 1; k <= 5; ++k) {
    for (std::uint32_t n = 0; n <= 7; ++n) {
      const auto ref = serial::kary_balanced_classes(k, n);
      ASSERT_EQ(ref.size(), n / 2 + 1);
      for (unsigned jobs : kJobCounts) ASSERT_EQ(omp::kary_balanced_classes(k, n, jobs), ref);
    }
  }
}

TEST(KernelsTest, PermKernelsSerialVsParallel) {
  for (std::uint32_t n = 0; n <= 8; ++n) {
    const auto hist = serial::perm_cell_histogram(n);
    const auto census = serial::perm_displacement_census(n);
    ASSERT_EQ(census.size(), n + 1);
    for (unsigned jobs : kJobCounts) {
      ASSERT_EQ(omp::perm_cell_histogram(n, jobs), hist) << n << "," << jobs;
      ASSERT_EQ(omp::perm_displacement_census(n, jobs), census) << n << "," << jobs;
    }
  }
}

TEST(KernelsTest, HistogramMergeAndPolynomial) {
  CellHistogram a(2, 2), b(2, 2);
  a.counts = {1, 0, 0, 2};
  b.counts = {0, 3, 0, 1};
  a.merge(b);
  EXPECT_EQ(a.counts, (std::vector<std::uint64_t>{1, 3, 0, 3}));
  const BivariatePolynomial p = a.to_polynomial();
  EXPECT_EQ(p, BivariatePolynomial(BigInt(1)) + BivariatePolynomial::monomial(3, 0, 1) +
                   BivariatePolynomial::monomial(3, 1, 1));
}

TEST(KernelsTest, RyserScalarSerialVsParallelVsDefinition) {
  constexpr std::uint64_t seed = 1729;
  SCOPED_TRACE("seed=" + std::to_string(seed));
  testing::Gen gen(seed);
  for (std::size_t n = 0; n <= 7; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      StructuredMatrix<BigRational> a(n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) a(i, j) = gen.rational();
      const BigRational ref = serial::ryser_permanent(a);
      if (n >= 1) ASSERT_EQ(ref, testing::permanent_by_definition(a, BigRational(1))) << n;
      for (unsigned jobs : kJobCounts) ASSERT_EQ(omp::ryser_permanent(a, jobs), ref) << n << "," << jobs;
    }
  }
}

TEST(KernelsTest, RyserPolynomialSerialVsParallel) {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const auto M = theorem_matrix(n);
    const auto ref = serial::ryser_permanent(M);
    for (unsigned jobs : kJobCounts) ASSERT_EQ(omp::ryser_permanent(M, jobs), ref) << n << "," << jobs;
  }
}

TEST(KernelsTest, EmptyMatrixPermanentIsOne) {
  EXPECT_EQ(serial::ryser_permanent(StructuredMatrix<BigRational>(0)), 1);
  EXPECT_EQ(omp::ryser_permanent(StructuredMatrix<BigRational>(0), 4), 1);
}

}  // namespace
}  // namespace bwcap::kernels
