#include "bwcap/asymptotics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bwcap/error.hpp"

namespace bwcap {
namespace {

TEST(AsymptoticsTest, LimitShapes) {
  EXPECT_DOUBLE_EQ(kary_asymptotic(2, 100), std::sqrt(2.0 / (std::numbers::pi * 100)));
  EXPECT_DOUBLE_EQ(kary_asymptotic(3, 100), std::sqrt(2.0 / (std::numbers::pi * 100)) * std::sqrt(9.0 / 8.0));
  EXPECT_DOUBLE_EQ(perm_asymptotic(8), std::sqrt(8.0 / (std::numbers::pi * 8)));
  EXPECT_THROW((void)perm_asymptotic(5), UsageError);
  EXPECT_THROW((void)perm_asymptotic(6), UsageError);
  EXPECT_THROW((void)kary_asymptotic(1, 10), UsageError);
}

TEST(AsymptoticsTest, SzegoSpecializationIdentities) {
  for (std::uint32_t k = 2; k <= 9; ++k) EXPECT_TRUE(szego_specialization_holds(k)) << k;
  const long double x = 10.0L / 6.0L;
  EXPECT_NEAR(static_cast<double>(x + std::sqrt(x * x - 1)), 3.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(std::sqrt(x + 1) + std::sqrt(x - 1)), std::sqrt(6.0), 1e-15);
  for (std::uint32_t m : {5u, 40u, 300u}) {
    for (std::uint32_t a : {0u, 1u}) {
      const long double general = jacobi_szego_estimate(m, a, 0, x);
      const long double special = jacobi_szego_specialized(m, a, 3);
      EXPECT_NEAR(static_cast<double>(general / special), 1.0, 1e-12) << m << " " << a;
    }
  }
}

// Errors calibrated against the exact oracle (tests/oracles/oracle.py).
TEST(AsymptoticsTest, KaryAndPermConvergence) {
  const std::vector<std::uint32_t> schedule{8, 40, 200, 1000};
  struct Case {
    ClaimSpec spec;
    double err8, err1000;
  };
  const Case cases[] = {
      {{Claim::kary_even, 2, 0}, 0.0307, 0.00025},
      {{Claim::kary_odd, 3, 0}, 0.0214, 0.000187},
      {{Claim::kary_odd, 5, 0}, 0.0277, 0.000229},
      {{Claim::perm, 0, 0}, 0.0885, 0.00075},
  };
  for (const auto& c : cases) {
    const auto r = convergence_report(c.spec, schedule);
    ASSERT_EQ(r.points.size(), 4u);
    EXPECT_TRUE(r.strictly_decreasing()) << to_string(c.spec.claim);
    EXPECT_NEAR(r.at(8).relative_error, c.err8, 5e-4) << to_string(c.spec.claim);
    EXPECT_NEAR(r.at(1000).relative_error, c.err1000, 1e-5) << to_string(c.spec.claim);
    EXPECT_LT(r.at(200).relative_error, 0.05);
    EXPECT_LT(r.at(1000).relative_error, 0.01);
  }
}

TEST(AsymptoticsTest, PermScheduleIsSnappedToNonzeroResidues) {
  const auto r = convergence_report({Claim::perm, 0, 0}, {5, 6, 9, 1});
  ASSERT_EQ(r.points.size(), 4u);
  EXPECT_EQ(r.points[0].n, 4u);
  EXPECT_EQ(r.points[1].n, 7u);
  EXPECT_EQ(r.points[2].n, 8u);
  EXPECT_EQ(r.points[3].n, 3u);
}

TEST(AsymptoticsTest, SzegoConvergence) {
  for (std::uint32_t alpha : {0u, 1u}) {
    const auto r = convergence_report({Claim::jacobi_szego, 3, alpha}, {10, 50, 250});
    EXPECT_TRUE(r.strictly_decreasing());
    EXPECT_LT(r.at(50).relative_error, 0.05);
    EXPECT_LT(r.at(250).relative_error, 0.01);
  }
  const auto r0 = convergence_report({Claim::jacobi_szego, 3, 0}, {10, 50, 250});
  EXPECT_NEAR(r0.at(10).relative_error, 0.0091, 3e-4);
}

TEST(AsymptoticsTest, ClaimNames) {
  for (Claim c : {Claim::kary_even, Claim::kary_odd, Claim::perm, Claim::jacobi_szego}) {
    EXPECT_EQ(parse_claim(to_string(c)), c);
  }
  EXPECT_THROW((void)parse_claim("nope"), UsageError);
  EXPECT_THROW((void)convergence_report({Claim::kary_even, 3, 0}, {8}), UsageError);
}

}  // namespace
}  // namespace bwcap
