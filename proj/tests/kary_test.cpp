#include "bwcap/kary.hpp"

#include <gtest/gtest.h>

#include "bwcap/error.hpp"
#include "support/oracles.hpp"

namespace bwcap {
namespace {

using P = BivariatePolynomial;

P from_census(const std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>& census) {
  P p;
  for (const auto& [bw, c] : census) {
    p.add_term(from_u64(c), static_cast<std::uint32_t>(bw.first), static_cast<std::uint32_t>(bw.second));
  }
  return p;
}

// Oracle values from tests/oracles/oracle.py.
TEST(KaryTest, FrozenPolynomials) {
  P k3n2;
  k3n2.add_term(1, 1, 1);
  k3n2.add_term(1, 1, 2);
  k3n2.add_term(1, 2, 1);
  k3n2.add_term(3, 2, 2);
  k3n2.add_term(1, 2, 3);
  k3n2.add_term(1, 3, 2);
  k3n2.add_term(1, 3, 3);
  EXPECT_EQ(f_n_kary({3, 2}), k3n2);
  EXPECT_EQ(f_n_kary_brute({3, 2}), k3n2);
  EXPECT_EQ(f_n_kary({1, 3}), P::monomial(1, 2, 1));
  EXPECT_EQ(f_n_kary({5, 0}), P(BigInt(1)));
}

TEST(KaryTest, SingleLetterPolynomial) {
  EXPECT_EQ(g_k(1), P::b());
  EXPECT_EQ(g_k(4), P::b() + P::monomial(1, 1, 1) + P::monomial(1, 2, 1) + P::monomial(1, 2, 2));
}

TEST(KaryTest, ProductFormMatchesOracleCensus) {
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint32_t n = 0; n <= 7; ++n) {
      ASSERT_EQ(f_n_kary({k, n}), from_census(testing::kary_census(k, n))) << "k=" << k << " n=" << n;
    }
  }
}

TEST(KaryTest, GeneratingFunctionMatchesBrute) {
  for (std::uint32_t k = 1; k <= 4; ++k) {
    const auto F = F_k_coefficients(k, 8);
    ASSERT_EQ(F.size(), 9u);
    for (std::uint32_t n = 0; n <= 8; ++n) ASSERT_EQ(F[n], f_n_kary_brute({k, n})) << "k=" << k << " n=" << n;
  }
}

TEST(KaryTest, CoefficientSumIsWordCount) {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    for (std::uint32_t n = 0; n <= 9; ++n) ASSERT_EQ(f_n_kary({k, n}).coefficient_sum(), pow_int(k, n));
  }
}

TEST(KaryTest, FourCountRoutesAgree) {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    const auto series = bal_kary_series(k, 12);
    for (std::uint32_t n = 0; n <= 12; ++n) {
      const BigInt s = bal_kary_sum({k, n});
      ASSERT_EQ(bal_kary_jacobi({k, n}), s) << "k=" << k << " n=" << n;
      ASSERT_EQ(series[n], s) << "k=" << k << " n=" << n;
      if (n <= 7) ASSERT_EQ(bal_kary_brute({k, n}), s) << "k=" << k << " n=" << n;
    }
  }
}

TEST(KaryTest, KnownCounts) {
  EXPECT_EQ(bal_kary_sum({2, 10}), 252);
  EXPECT_EQ(bal_kary_sum({3, 4}), 33);
  EXPECT_EQ(bal_kary_sum({1, 4}), 1);
  EXPECT_EQ(bal_kary_sum({1, 3}), 0);
  EXPECT_EQ(bal_kary_sum({6, 10}), 14880348);
}

TEST(KaryTest, PerClassCounts) {
  const std::vector<BigInt> k2n4{1, 4, 1}, k3n4{1, 16, 16}, k4n5{32, 192, 96}, k3n6{1, 36, 144, 64};
  EXPECT_EQ(bal_kary_classes_brute({2, 4}), k2n4);
  EXPECT_EQ(bal_kary_classes_brute({3, 4}), k3n4);
  EXPECT_EQ(bal_kary_classes_brute({4, 5}), k4n5);
  EXPECT_EQ(bal_kary_classes_brute({3, 6}), k3n6);
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint32_t n = 0; n <= 8; ++n) {
      const auto brute = bal_kary_classes_brute({k, n});
      for (std::uint32_t r = 0; r < brute.size(); ++r) ASSERT_EQ(brute[r], bal_kary_class_size({k, n}, r));
    }
  }
}

TEST(KaryTest, LaurentClaims) {
  for (std::uint32_t k = 2; k <= 6; ++k) {
    const auto check = laurent_claims_check(k, 10);
    EXPECT_TRUE(check.ok) << "k=" << k;
    EXPECT_FALSE(check.first_mismatch.has_value());
  }
}

TEST(KaryTest, Budgets) {
  Budget tight;
  tight.max_words = 100;
  EXPECT_THROW((void)f_n_kary_brute({3, 5}, tight), BudgetError);
  EXPECT_THROW((void)bal_kary_brute({3, 5}, tight), BudgetError);
  EXPECT_NO_THROW((void)f_n_kary_brute({3, 4}, tight));
  Budget cells;
  cells.exponent_cap = 20;
  EXPECT_THROW((void)f_n_kary({5, 5}, cells), BudgetError);
}

TEST(KaryTest, TablesAndMethods) {
  const auto sum = bal_kary_table(6, 10, CountMethod::sum);
  EXPECT_EQ(sum.at(2, 10), 252);
  EXPECT_EQ(sum.at(1, 0), 1);
  for (auto m : {CountMethod::jacobi, CountMethod::series}) EXPECT_TRUE(same_values(sum, bal_kary_table(6, 10, m)));
  EXPECT_EQ(parse_count_method("series"), CountMethod::series);
  EXPECT_EQ(to_string(CountMethod::brute), "brute");
  EXPECT_THROW((void)parse_count_method("guess"), UsageError);
  EXPECT_THROW((void)sum.at(7, 0), UsageError);
}

}  // namespace
}  // namespace bwcap
