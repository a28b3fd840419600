#include "bwcap/perm.hpp"

#include <string>

#include "bwcap/error.hpp"
#include "bwcap/kernels.hpp"
#include "bwcap/special_functions.hpp"

namespace bwcap {

namespace {

void check_perm_budget(std::uint32_t n, const Budget& budget) {
  if (n > budget.max_perm_n) {
    throw BudgetError("S_" + std::to_string(n) + " exceeds the brute-force budget n <= " +
                      std::to_string(budget.max_perm_n));
  }
}

void check_cells(std::uint32_t n, const Budget& budget) {
  const std::uint64_t cells = std::uint64_t{n} * (n + 1) / 2;
  if (cells > budget.exponent_cap) {
    throw BudgetError("total cell count " + std::to_string(cells) + " exceeds exponent cap " +
                      std::to_string(budget.exponent_cap));
  }
}

}  // namespace

StructuredMatrix<BivariatePolynomial> theorem_matrix(std::uint32_t n) {
  StructuredMatrix<BivariatePolynomial> m(n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    const std::uint32_t hi = (j + 1) / 2, lo = j / 2;
    for (std::uint32_t i = 1; i <= n; ++i) {
      m(i, j) = (i % 2 == 1) ? BivariatePolynomial::monomial(1, hi, lo) : BivariatePolynomial::monomial(1, lo, hi);
    }
    // Column j is (bw)^{floor(j/2)} times 1_n (j even) or times v = (b, w, b, ...) (j odd).
    m.set_column_kind(j, j % 2 == 0 ? ColumnKind::ones : ColumnKind::v);
  }
  return m;
}

StructuredMatrix<BigRational> ones_v_matrix(std::span<const ColumnKind> kinds, std::span<const BigRational> v) {
  if (kinds.size() != v.size()) throw UsageError("column-kind list and v differ in length");
  const std::size_t n = v.size();
  StructuredMatrix<BigRational> m(n);
  for (std::size_t j = 1; j <= n; ++j) {
    m.set_column_kind(j, kinds[j - 1]);
    for (std::size_t i = 1; i <= n; ++i) m(i, j) = kinds[j - 1] == ColumnKind::ones ? BigRational(1) : v[i - 1];
  }
  return m;
}

BigRational permanent(const StructuredMatrix<BigRational>& a, const Budget& budget, Jobs jobs) {
  if (a.size() > budget.max_permanent_scalar) {
    throw BudgetError("permanent of size " + std::to_string(a.size()) + " exceeds budget " +
                      std::to_string(budget.max_permanent_scalar));
  }
  return jobs.count <= 1 ? kernels::serial::ryser_permanent(a) : kernels::omp::ryser_permanent(a, jobs.count);
}

BivariatePolynomial permanent(const StructuredMatrix<BivariatePolynomial>& a, const Budget& budget, Jobs jobs) {
  if (a.size() > budget.max_permanent_poly) {
    throw BudgetError("polynomial permanent of size " + std::to_string(a.size()) + " exceeds budget " +
                      std::to_string(budget.max_permanent_poly));
  }
  return jobs.count <= 1 ? kernels::serial::ryser_permanent(a) : kernels::omp::ryser_permanent(a, jobs.count);
}

BigRational lemma1_formula(std::uint32_t n, std::uint32_t m, std::span<const BigRational> v) {
  if (m > n) throw UsageError("lemma1_formula needs m <= n");
  if (v.size() != n) throw UsageError("lemma1_formula needs |v| = n");
  // e[j] = elementary symmetric polynomial of degree j in the prefix of v seen so far.
  std::vector<BigRational> e(n + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += e[j - 1] * v[i];
  }
  return BigRational(factorial(m) * factorial(n - m)) * e[n - m];
}

BivariatePolynomial f_n_perm_brute(std::uint32_t n, const Budget& budget, Jobs jobs) {
  check_perm_budget(n, budget);
  check_cells(n, budget);
  const auto hist = jobs.count <= 1 ? kernels::serial::perm_cell_histogram(n)
                                    : kernels::omp::perm_cell_histogram(n, jobs.count);
  return hist.to_polynomial();
}

BivariatePolynomial f_n_perm_closed(std::uint32_t n, const Budget& budget) {
  check_cells(n, budget);
  const std::uint32_t lo = n / 2, hi = (n + 1) / 2;
  const std::uint32_t shift = lo * hi;  // floor(n^2/4)
  BivariatePolynomial sum;
  for (std::uint32_t r = 0; r <= lo; ++r) sum.add_term(binomial(lo, r) * binomial(hi, r), hi - r, r);
  return (sum * BigInt(factorial(lo) * factorial(hi))).shifted(shift, shift);
}

BivariatePolynomial f_n_perm_closed_jacobi(std::uint32_t n, const Budget& budget) {
  check_cells(n, budget);
  const std::uint32_t lo = n / 2, hi = (n + 1) / 2;
  const std::int64_t alpha = n % 2;
  // Q_d = (w-b)^d P_d^{(alpha,0)}((w+b)/(w-b)) satisfies the Jacobi recurrence with x
  // replaced by (w+b) and every degree drop paid for by a factor (w-b).
  const BivariatePolynomial sum_bw = BivariatePolynomial::w() + BivariatePolynomial::b();
  const BivariatePolynomial diff_bw = BivariatePolynomial::w() - BivariatePolynomial::b();
  const BivariatePolynomial diff_sq = diff_bw * diff_bw;
  BivariatePolynomial prev(1);
  BivariatePolynomial cur = (sum_bw * BigInt(alpha + 2) + diff_bw * BigInt(alpha)).divided_exactly(2);
  if (lo == 0) cur = prev;
  for (std::int64_t d = 2; d <= static_cast<std::int64_t>(lo); ++d) {
    const std::int64_t s = 2 * d + alpha;
    const BigInt lhs = BigInt(2 * d) * BigInt(d + alpha) * BigInt(s - 2);
    const BivariatePolynomial c1 = (sum_bw * (BigInt(s) * (s - 2)) + diff_bw * BigInt(alpha * alpha)) * BigInt(s - 1);
    const BivariatePolynomial c2 = diff_sq * (BigInt(2) * BigInt(d + alpha - 1) * BigInt(d - 1) * BigInt(s));
    BivariatePolynomial next = (c1 * cur - c2 * prev).divided_exactly(lhs);
    prev = std::move(cur);
    cur = std::move(next);
  }
  const std::uint32_t shift = lo * hi;
  return (cur * BigInt(factorial(lo) * factorial(hi))).shifted(shift + static_cast<std::uint32_t>(alpha), shift);
}

BivariatePolynomial f_n_perm_permanent(std::uint32_t n, const Budget& budget, Jobs jobs) {
  check_cells(n, budget);
  return permanent(theorem_matrix(n), budget, jobs);
}

BigInt bal_perm_closed(std::uint32_t n) {
  const std::uint32_t lo = n / 2, hi = (n + 1) / 2;
  if (hi % 2 == 1) return 0;
  return factorial(lo) * factorial(hi) * binomial(hi, hi / 2) * binomial(lo, hi / 2);
}

BigInt bal_perm_brute(std::uint32_t n, const Budget& budget, Jobs jobs) {
  return balanced_coefficient_sum(f_n_perm_brute(n, budget, jobs));
}

RationalSeries bal_perm_egf(std::uint32_t order) {
  const std::size_t work = order + 1;
  RationalSeries g(work);
  for (const auto& term : g_series_terms(work / 4 + 1)) {
    if (4 * term.index <= work) g[4 * term.index] = term.value;
  }
  const RationalSeries numerator = series_mul(RationalSeries(work, {1, 1}), g) - RationalSeries::constant(1, work);
  return series_div(numerator, RationalSeries::monomial(1, 1, work));
}

BigInt t_formula(std::uint32_t n, std::uint32_t m) {
  if (n < 1 || m < 1) throw UsageError("t_formula needs n >= 1 and m >= 1");
  const std::uint32_t lo = n / 2, hi = (n + 1) / 2;
  return factorial(lo) * factorial(hi) * binomial(lo, m - 1) * binomial(hi, m - 1);
}

BigInt DisplacementCensus::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

DisplacementCensus displacement_census(std::uint32_t n, const Budget& budget, Jobs jobs) {
  check_perm_budget(n, budget);
  const auto raw = jobs.count <= 1 ? kernels::serial::perm_displacement_census(n)
                                   : kernels::omp::perm_displacement_census(n, jobs.count);
  DisplacementCensus c{n, {}};
  c.counts.reserve(raw.size());
  for (auto v : raw) c.counts.push_back(from_u64(v));
  return c;
}

}  // namespace bwcap
