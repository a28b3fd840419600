#include "bwcap/special_functions.hpp"

#include <string>

#include "bwcap/error.hpp"

namespace bwcap {

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (n < 0) throw UsageError("binomial upper index must be >= 0, got " + std::to_string(n));
  if (r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigRational pochhammer(const BigRational& a, std::uint64_t m) {
  BigRational out = 1;
  BigRational factor = a;
  for (std::uint64_t i = 0; i < m; ++i) {
    out *= factor;
    factor += 1;
  }
  return out;
}

BigRational jacobi_eval(const JacobiQuery& q) {
  const BigRational& x = q.x;
  const std::int64_t a = q.alpha;
  const std::int64_t b = q.beta;
  if (q.degree == 0) return 1;
  BigRational prev = 1;
  BigRational cur = (BigRational(a + b + 2) * x + BigRational(a - b)) / 2;
  // 2n(n+a+b)(2n+a+b-2) P_n = (2n+a+b-1)((2n+a+b)(2n+a+b-2) x + a^2 - b^2) P_{n-1}
  //                          - 2(n+a-1)(n+b-1)(2n+a+b) P_{n-2}
  for (std::int64_t n = 2; n <= static_cast<std::int64_t>(q.degree); ++n) {
    const std::int64_t s = 2 * n + a + b;
    const BigInt lhs = BigInt(2 * n) * BigInt(n + a + b) * BigInt(s - 2);
    const BigRational c1 = BigRational(s - 1) * (BigRational(BigInt(s) * BigInt(s - 2)) * x + BigRational(a * a - b * b));
    const BigRational c2 = BigRational(BigInt(2) * BigInt(n + a - 1) * BigInt(n + b - 1) * BigInt(s));
    BigRational next = (c1 * cur - c2 * prev) / BigRational(lhs);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigRational jacobi_eval_explicit(const JacobiQuery& q) {
  const std::int64_t m = q.degree;
  const BigRational lo = (q.x - 1) / 2;
  const BigRational hi = (q.x + 1) / 2;
  BigRational sum = 0;
  for (std::int64_t s = 0; s <= m; ++s) {
    sum += BigRational(binomial(m + q.alpha, m - s) * binomial(m + q.beta, s)) * pow_rat(lo, s) * pow_rat(hi, m - s);
  }
  return sum;
}

BigRational jacobi_identity_lhs(std::uint32_t n, std::uint32_t alpha, std::uint32_t beta, const BigRational& x) {
  BigRational sum = 0;
  BigRational xi = 1;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(n); ++i) {
    sum += BigRational(binomial(std::int64_t{n} + alpha, i) * binomial(std::int64_t{n} + beta, n - i)) * xi;
    xi *= x;
  }
  return sum;
}

BigRational jacobi_identity_rhs(std::uint32_t n, std::uint32_t alpha, std::uint32_t beta, const BigRational& x) {
  if (x == 1) throw UsageError("jacobi_identity_rhs is undefined at x = 1");
  const BigRational arg = (x + 1) / (x - 1);
  return pow_rat(x - 1, n) * jacobi_eval(JacobiQuery{n, alpha, beta, arg});
}

BigRational g_series_coefficient(std::uint64_t m) {
  const BigRational half = pochhammer(BigRational(1, 2), m);
  return half * half * half /
         (BigRational(factorial(m)) * pochhammer(BigRational(1, 4), m) * pochhammer(BigRational(3, 4), m));
}

std::vector<HypergeometricTerm> g_series_terms(std::uint64_t count) {
  std::vector<HypergeometricTerm> out;
  out.reserve(count);
  BigRational value = 1;
  for (std::uint64_t m = 0; m < count; ++m) {
    out.push_back({m, value});
    const BigRational mm(static_cast<unsigned long>(m));
    const BigRational h = mm + BigRational(1, 2);
    value *= h * h * h / ((mm + BigRational(1, 4)) * (mm + BigRational(3, 4)) * (mm + 1));
  }
  return out;
}

}  // namespace bwcap
