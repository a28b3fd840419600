#include "bwcap/perm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bwcap/bargraph.hpp"
#include "bwcap/error.hpp"
#include "bwcap/special_functions.hpp"
#include "support/oracles.hpp"

namespace bwcap {
namespace {

using P = BivariatePolynomial;

TEST(PermTest, SmallPolynomials) {
  const P n3 = P::monomial(2, 4, 2) + P::monomial(4, 3, 3);
  EXPECT_EQ(f_n_perm_brute(3), n3);
  EXPECT_EQ(f_n_perm_closed(3), n3);
  EXPECT_EQ(f_n_perm_closed_jacobi(3), n3);
  EXPECT_EQ(f_n_perm_permanent(3), n3);
  const P n4 = P::monomial(4, 4, 6) + P::monomial(16, 5, 5) + P::monomial(4, 6, 4);
  EXPECT_EQ(f_n_perm_brute(4), n4);
  EXPECT_EQ(f_n_perm_closed(0), P(BigInt(1)));
  EXPECT_EQ(f_n_perm_brute(0), P(BigInt(1)));
  EXPECT_EQ(f_n_perm_closed(1), P::b());
}

TEST(PermTest, BruteMatchesOracleCensus) {
  for (std::uint32_t n = 0; n <= 7; ++n) {
    P p;
    for (const auto& [bw, c] : testing::perm_census(n)) {
      p.add_term(from_u64(c), static_cast<std::uint32_t>(bw.first), static_cast<std::uint32_t>(bw.second));
    }
    ASSERT_EQ(f_n_perm_brute(n), p) << n;
  }
}

Budget wide_exponents() {
  Budget b;
  b.exponent_cap = 1u << 16;
  return b;
}

TEST(PermTest, ClosedFormExpansionsAgree) {
  const Budget b = wide_exponents();
  for (std::uint32_t n = 0; n <= 40; ++n) ASSERT_EQ(f_n_perm_closed(n, b), f_n_perm_closed_jacobi(n, b)) << n;
}

TEST(PermTest, PermanentOfCellMatrix) {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const auto M = theorem_matrix(n);
    ASSERT_EQ(permanent(M), f_n_perm_closed(n)) << n;
    if (n <= 6) ASSERT_EQ(testing::permanent_by_definition(M, P(BigInt(1))), f_n_perm_closed(n)) << n;
  }
  const auto M = theorem_matrix(4);
  EXPECT_EQ(M(1, 3), P::monomial(1, 2, 1));
  EXPECT_EQ(M(2, 3), P::monomial(1, 1, 2));
  EXPECT_EQ(M.column_kind(2), ColumnKind::ones);
  EXPECT_EQ(M.column_kind(3), ColumnKind::v);
}

TEST(PermTest, LemmaAgainstRyserAndDefinition) {
  constexpr std::uint64_t seed = 1001;
  SCOPED_TRACE("seed=" + std::to_string(seed));
  testing::Gen gen(seed);
  for (std::uint32_t n = 0; n <= 6; ++n) {
    for (std::uint32_t m = 0; m <= n; ++m) {
      std::vector<BigRational> v(n);
      for (auto& x : v) x = gen.rational();
      std::vector<ColumnKind> kinds(n, ColumnKind::v);
      std::fill(kinds.begin(), kinds.begin() + m, ColumnKind::ones);
      std::shuffle(kinds.begin(), kinds.end(), gen.rng);
      const auto A = ones_v_matrix(kinds, v);
      const BigRational expected = lemma1_formula(n, m, v);
      ASSERT_EQ(permanent(A), expected) << "n=" << n << " m=" << m;
      ASSERT_EQ(testing::permanent_by_definition(A, BigRational(1)), expected);
      std::vector<std::size_t> cols(n);
      std::iota(cols.begin(), cols.end(), std::size_t{1});
      std::shuffle(cols.begin(), cols.end(), gen.rng);
      ASSERT_EQ(permanent(A.permuted_columns(cols)), expected);
    }
  }
}

TEST(PermTest, LemmaRejectsBadShapes) {
  const std::vector<BigRational> v{1, 2};
  EXPECT_THROW((void)lemma1_formula(2, 3, v), UsageError);
  EXPECT_THROW((void)lemma1_formula(3, 1, v), UsageError);
  const std::vector<ColumnKind> kinds{ColumnKind::ones};
  EXPECT_THROW((void)ones_v_matrix(kinds, v), UsageError);
}

TEST(PermTest, BalancedCounts) {
  const std::vector<BigInt> expected{1, 0, 0, 4, 16, 0, 0, 2592, 20736};
  for (std::uint32_t n = 0; n <= 8; ++n) {
    EXPECT_EQ(bal_perm_closed(n), expected[n]) << n;
    if (n <= 7) EXPECT_EQ(bal_perm_brute(n), expected[n]) << n;
  }
  for (std::uint32_t n = 0; n <= 60; ++n) {
    if (n % 4 == 1 || n % 4 == 2) ASSERT_EQ(bal_perm_closed(n), 0) << n;
  }
}

TEST(PermTest, ExponentialGeneratingFunction) {
  const auto egf = bal_perm_egf(30);
  ASSERT_EQ(egf.order(), 30u);
  for (std::uint32_t n = 0; n <= 30; ++n) {
    ASSERT_EQ(egf[n], make_rational(bal_perm_closed(n), factorial(n))) << n;
  }
  EXPECT_EQ(egf[3], make_rational(2, 3));
  EXPECT_EQ(egf[8], make_rational(18, 35));
}

// Every permutation of [n] has n(n+1)/2 cells, at least floor(n^2/4) of each colour.
TEST(PermTest, ExponentsOfClosedForm) {
  for (std::uint32_t n = 0; n <= 200; n += 7) {
    const P p = f_n_perm_closed(n, wide_exponents());
    const std::uint32_t cells = n * (n + 1) / 2;
    for (const auto& [e, c] : p.terms()) {
      ASSERT_EQ(e.b + e.w, cells) << n;
      ASSERT_GE(e.b, n * n / 4) << n;
      ASSERT_GE(e.w, n * n / 4) << n;
      ASSERT_GT(c, 0);
    }
    ASSERT_EQ(p.coefficient_sum(), factorial(n)) << n;
  }
}

TEST(PermTest, Census) {
  const std::vector<std::vector<BigInt>> expected{
      {4, 0, 16, 0, 4},
      {12, 0, 72, 0, 36, 0},
      {36, 0, 324, 0, 324, 0, 36},
      {144, 0, 1728, 0, 2592, 0, 576, 0},
      {576, 0, 9216, 0, 20736, 0, 9216, 0, 576},
  };
  for (std::uint32_t n = 4; n <= 8; ++n) {
    const auto c = displacement_census(n);
    EXPECT_EQ(c.n, n);
    EXPECT_EQ(c.counts, expected[n - 4]) << n;
    EXPECT_EQ(c.total(), factorial(n));
    EXPECT_EQ(c.counts[(n + 1) / 2], bal_perm_closed(n));
  }
}

TEST(PermTest, CensusMatchesTFormula) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto c = displacement_census(n);
    for (std::uint32_t m = 1; 2 * m - 2 <= n; ++m) ASSERT_EQ(c.counts[2 * m - 2], t_formula(n, m)) << n << "," << m;
  }
  EXPECT_THROW((void)t_formula(0, 1), UsageError);
  EXPECT_THROW((void)t_formula(3, 0), UsageError);
}

TEST(PermTest, Budgets) {
  Budget b;
  b.max_perm_n = 5;
  EXPECT_THROW((void)f_n_perm_brute(6, b), BudgetError);
  EXPECT_THROW((void)displacement_census(6, b), BudgetError);
  b.max_permanent_poly = 4;
  EXPECT_THROW((void)f_n_perm_permanent(5, b), BudgetError);
  b.max_permanent_scalar = 3;
  const std::vector<BigRational> v{1, 2, 3, 4};
  const std::vector<ColumnKind> kinds(4, ColumnKind::v);
  EXPECT_THROW((void)permanent(ones_v_matrix(kinds, v), b), BudgetError);
}

}  // namespace
}  // namespace bwcap
