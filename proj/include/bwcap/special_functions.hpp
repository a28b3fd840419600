#pragma once

#include <cstdint>
#include <vector>

#include "bwcap/bigint.hpp"

namespace bwcap {

/// C(n, r); 0 when r < 0 or r > n. Throws UsageError for n < 0.
[[nodiscard]] BigInt binomial(std::int64_t n, std::int64_t r);
[[nodiscard]] BigInt factorial(std::uint64_t n);

/// Rising factorial (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1.
[[nodiscard]] BigRational pochhammer(const BigRational& a, std::uint64_t m);

struct JacobiQuery {
  std::uint32_t degree = 0;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  BigRational x;
};

/// P_m^{(alpha,beta)}(x) by the three-term recurrence in the degree.
[[nodiscard]] BigRational jacobi_eval(const JacobiQuery& q);

/// P_m^{(alpha,beta)}(x) by the explicit finite sum
///   sum_s C(m+alpha, m-s) C(m+beta, s) ((x-1)/2)^s ((x+1)/2)^(m-s).
/// Kept as an independent route; it must agree with jacobi_eval.
[[nodiscard]] BigRational jacobi_eval_explicit(const JacobiQuery& q);

/// sum_{i=0}^{n} C(n+alpha, i) C(n+beta, n-i) x^i, the left side of the
/// binomial-sum / Jacobi identity.
[[nodiscard]] BigRational jacobi_identity_lhs(std::uint32_t n, std::uint32_t alpha, std::uint32_t beta,
                                              const BigRational& x);

/// (x-1)^n P_n^{(alpha,beta)}((x+1)/(x-1)). Undefined at x = 1 (UsageError).
[[nodiscard]] BigRational jacobi_identity_rhs(std::uint32_t n, std::uint32_t alpha, std::uint32_t beta,
                                              const BigRational& x);

/// One term of G(x) = 3F2(1/2,1/2,1/2; 1/4,3/4; x^4): the x^{4m} coefficient.
struct HypergeometricTerm {
  std::uint64_t index = 0;
  BigRational value;
};

/// (1/2)_m^3 / (m! (1/4)_m (3/4)_m), evaluated directly from Pochhammer symbols.
[[nodiscard]] BigRational g_series_coefficient(std::uint64_t m);

/// Terms 0..count-1 of G, generated by the term ratio
/// (m+1/2)^3 / ((m+1/4)(m+3/4)(m+1)).
[[nodiscard]] std::vector<HypergeometricTerm> g_series_terms(std::uint64_t count);

}  // namespace bwcap
