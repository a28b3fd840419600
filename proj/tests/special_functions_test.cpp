#include "bwcap/special_functions.hpp"

#include <gtest/gtest.h>

#include "bwcap/error.hpp"
#include "support/oracles.hpp"

namespace bwcap {
namespace {

TEST(SpecialFunctionsTest, Binomial) {
  EXPECT_EQ(binomial(10, 5), 252);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_THROW((void)binomial(-1, 0), UsageError);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
}

TEST(SpecialFunctionsTest, Pochhammer) {
  EXPECT_EQ(pochhammer(make_rational(1, 4), 3), make_rational(45, 64));
  EXPECT_EQ(pochhammer(5, 0), 1);
  EXPECT_EQ(pochhammer(1, 6), 720);
  EXPECT_EQ(pochhammer(-2, 3), 0);
}

TEST(SpecialFunctionsTest, JacobiFixtures) {
  EXPECT_EQ(jacobi_eval({1, 1, 0, 3}), 5);
  EXPECT_EQ(jacobi_eval({2, 1, 0, make_rational(5, 3)}), make_rational(73, 9));
  EXPECT_EQ(jacobi_eval({1, 0, 0, make_rational(5, 3)}), make_rational(5, 3));
  EXPECT_EQ(jacobi_eval({0, 2, 3, 7}), 1);
  // Legendre P_2(x) = (3x^2 - 1)/2.
  EXPECT_EQ(jacobi_eval({2, 0, 0, make_rational(1, 3)}), make_rational(-1, 3));
}

TEST(SpecialFunctionsTest, JacobiAtOneIsBinomial) {
  for (std::uint32_t m = 0; m <= 12; ++m) {
    for (std::uint32_t a = 0; a <= 3; ++a) {
      const BigRational expected(binomial(m + a, m));
      ASSERT_EQ(jacobi_eval({m, a, 2, 1}), expected);
      ASSERT_EQ(jacobi_eval_explicit({m, a, 2, 1}), expected);
    }
  }
}

TEST(SpecialFunctionsTest, RecurrenceMatchesExplicitSum) {
  constexpr std::uint64_t seed = 271828;
  SCOPED_TRACE("seed=" + std::to_string(seed));
  testing::Gen gen(seed);
  for (std::uint32_t m = 0; m <= 15; ++m) {
    for (std::uint32_t a = 0; a <= 3; ++a) {
      for (std::uint32_t b = 0; b <= 3; ++b) {
        const JacobiQuery q{m, a, b, gen.rational()};
        ASSERT_EQ(jacobi_eval(q), jacobi_eval_explicit(q)) << m << " " << a << " " << b << " " << q.x.get_str();
      }
    }
  }
}

TEST(SpecialFunctionsTest, BinomialSumIdentity) {
  constexpr std::uint64_t seed = 651;
  SCOPED_TRACE("seed=" + std::to_string(seed));
  testing::Gen gen(seed);
  for (std::uint32_t n = 0; n <= 10; ++n) {
    for (std::uint32_t a = 0; a <= 3; ++a) {
      for (std::uint32_t b = 0; b <= 3; ++b) {
        for (int t = 0; t < 5; ++t) {
          BigRational x = gen.rational();
          if (x == 1) x = 2;
          ASSERT_EQ(jacobi_identity_lhs(n, a, b, x), jacobi_identity_rhs(n, a, b, x)) << x.get_str();
        }
      }
    }
  }
  EXPECT_THROW((void)jacobi_identity_rhs(3, 0, 0, 1), UsageError);
}

TEST(SpecialFunctionsTest, DuplicationIdentity) {
  constexpr std::uint64_t seed = 2020;
  SCOPED_TRACE("seed=" + std::to_string(seed));
  testing::Gen gen(seed);
  for (int t = 0; t < 20; ++t) {
    const BigRational a = gen.rational();
    for (std::uint64_t m = 0; m <= 20; ++m) {
      const BigRational rhs = pow_rat(4, m) * pochhammer(a / 2, m) * pochhammer((a + 1) / 2, m);
      ASSERT_EQ(pochhammer(a, 2 * m), rhs) << a.get_str() << " m=" << m;
    }
  }
}

TEST(SpecialFunctionsTest, HypergeometricCoefficients) {
  EXPECT_EQ(g_series_coefficient(0), 1);
  EXPECT_EQ(g_series_coefficient(1), make_rational(2, 3));
  EXPECT_EQ(g_series_coefficient(2), make_rational(18, 35));
  const auto terms = g_series_terms(12);
  ASSERT_EQ(terms.size(), 12u);
  for (const auto& t : terms) EXPECT_EQ(t.value, g_series_coefficient(t.index));
}

}  // namespace
}  // namespace bwcap
