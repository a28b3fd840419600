#include "bwcap/kary.hpp"

#include <string>

#include "bwcap/error.hpp"
#include "bwcap/kernels.hpp"
#include "bwcap/series.hpp"
#include "bwcap/special_functions.hpp"

namespace bwcap {

namespace {

void check_k(std::uint32_t k) {
  if (k < 1) throw UsageError("alphabet size k must be >= 1");
}

void check_exponent_cap(std::uint64_t cells, const Budget& budget) {
  if (cells > budget.exponent_cap) {
    throw BudgetError("total cell bound " + std::to_string(cells) + " exceeds exponent cap " +
                      std::to_string(budget.exponent_cap));
  }
}

void check_word_budget(KaryParams p, const Budget& budget) {
  check_k(p.k);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < p.n; ++i) {
    if (total > budget.max_words / p.k) {
      throw BudgetError(std::to_string(p.k) + "^" + std::to_string(p.n) + " words exceed the brute-force budget of " +
                        std::to_string(budget.max_words));
    }
    total *= p.k;
  }
}

BigRational as_rational(std::uint64_t v) { return BigRational(from_u64(v)); }

}  // namespace

BivariatePolynomial g_k(std::uint32_t k) {
  check_k(k);
  BivariatePolynomial g;
  for (std::uint32_t h = 1; h <= k; ++h) g.add_term(1, (h + 1) / 2, h / 2);
  return g;
}

BivariatePolynomial f_n_kary(KaryParams p, const Budget& budget) {
  check_k(p.k);
  check_exponent_cap(std::uint64_t{p.n} * p.k, budget);
  const BivariatePolynomial g = g_k(p.k);
  BivariatePolynomial f = (g * g.swapped()).pow(p.n / 2);
  if (p.n % 2 == 1) f *= g;
  return f;
}

BivariatePolynomial f_n_kary_brute(KaryParams p, const Budget& budget, Jobs jobs) {
  check_word_budget(p, budget);
  check_exponent_cap(std::uint64_t{p.n} * p.k, budget);
  const auto hist = jobs.count <= 1 ? kernels::serial::kary_cell_histogram(p.k, p.n)
                                    : kernels::omp::kary_cell_histogram(p.k, p.n, jobs.count);
  return hist.to_polynomial();
}

std::vector<BivariatePolynomial> F_k_coefficients(std::uint32_t k, std::uint32_t order, const Budget& budget) {
  check_k(k);
  check_exponent_cap(std::uint64_t{order} * k, budget);
  const BivariatePolynomial g = g_k(k);
  const BivariatePolynomial denom_term = g * g.swapped();
  std::vector<BivariatePolynomial> out;
  out.reserve(order + 1);
  for (std::uint32_t n = 0; n <= order; ++n) {
    BivariatePolynomial c;
    if (n == 0) c = BivariatePolynomial(1);
    if (n == 1) c = g;
    if (n >= 2) c += denom_term * out[n - 2];
    out.push_back(std::move(c));
  }
  return out;
}

BigInt bal_kary_brute(KaryParams p, const Budget& budget, Jobs jobs) {
  BigInt total = 0;
  for (const auto& c : bal_kary_classes_brute(p, budget, jobs)) total += c;
  return total;
}

BigInt bal_kary_class_size(KaryParams p, std::uint32_t r) {
  check_k(p.k);
  const std::uint32_t lo_n = p.n / 2, hi_n = (p.n + 1) / 2;
  const std::uint32_t lo_k = p.k / 2, hi_k = (p.k + 1) / 2;
  if (r > lo_n) return 0;
  return binomial(hi_n, r) * binomial(lo_n, r) * pow_int(hi_k, 2ull * r) * pow_int(lo_k, p.n - 2ull * r);
}

std::vector<BigInt> bal_kary_classes_brute(KaryParams p, const Budget& budget, Jobs jobs) {
  check_word_budget(p, budget);
  const auto raw = jobs.count <= 1 ? kernels::serial::kary_balanced_classes(p.k, p.n)
                                   : kernels::omp::kary_balanced_classes(p.k, p.n, jobs.count);
  std::vector<BigInt> out;
  out.reserve(raw.size());
  for (auto c : raw) out.push_back(from_u64(c));
  return out;
}

BigInt bal_kary_sum(KaryParams p) {
  check_k(p.k);
  BigInt total = 0;
  for (std::uint32_t r = 0; r <= p.n / 2; ++r) total += bal_kary_class_size(p, r);
  return total;
}

BigInt bal_kary_jacobi(KaryParams p) {
  check_k(p.k);
  const std::uint32_t m = p.n / 2;
  if (p.k % 2 == 0) return pow_int(p.k / 2, p.n) * binomial(p.n, m);
  const std::uint32_t alpha = p.n % 2;
  const BigRational arg = make_rational(BigInt(p.k) * p.k + 1, BigInt(2) * p.k);
  const BigRational value = pow_rat(as_rational((p.k - 1) / 2), alpha) * BigRational(pow_int(p.k, m)) *
                            jacobi_eval(JacobiQuery{m, alpha, 0, arg});
  if (!is_integral(value)) {
    throw InconsistencyError("Jacobi route gave non-integral bal_" + std::to_string(p.k) + "(" +
                             std::to_string(p.n) + ") = " + value.get_str());
  }
  return value.get_num();
}

std::vector<BigInt> bal_kary_series(std::uint32_t k, std::uint32_t order) {
  check_k(k);
  RationalSeries bal(order);
  if (k == 1) {
    bal = series_div(RationalSeries::constant(1, order), RationalSeries(order, {1, 0, -1}));
  } else {
    // The division by x below costs one order, so work one order deeper.
    const std::size_t work = order + 1;
    const std::uint32_t lo = k / 2, hi = (k + 1) / 2;
    const RationalSeries A(work, {1, 0, -as_rational(std::uint64_t{lo} * lo + std::uint64_t{hi} * hi)});
    const RationalSeries B = RationalSeries::monomial(as_rational(std::uint64_t{lo} * hi), 2, work);
    const RationalSeries delta = series_sqrt(series_mul(A, A) - series_mul(B, B) * BigRational(4));
    const RationalSeries tail = series_div(A - delta, RationalSeries::monomial(as_rational(2ull * lo), 1, work));
    const RationalSeries inner = RationalSeries(work, {1, as_rational(lo)}).truncated(order) + tail;
    bal = series_div(inner, delta.truncated(order));
  }
  std::vector<BigInt> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (!is_integral(bal[n])) {
      throw InconsistencyError("series route gave non-integral coefficient " + bal[n].get_str() + " at x^" +
                               std::to_string(n));
    }
    out.push_back(bal[n].get_num());
  }
  return out;
}

LaurentCheck laurent_claims_check(std::uint32_t k, std::uint32_t order) {
  if (k < 2) throw UsageError("laurent_claims_check needs k >= 2");
  const std::uint32_t lo = k / 2, hi = (k + 1) / 2;
  // (A - Delta)/(2 B Delta) divides by B = O(x^2), so expand two orders deeper.
  const std::size_t work = order + 2;
  const RationalSeries A(work, {1, 0, -as_rational(std::uint64_t{lo} * lo + std::uint64_t{hi} * hi)});
  const RationalSeries B = RationalSeries::monomial(as_rational(std::uint64_t{lo} * hi), 2, work);
  const RationalSeries delta = series_sqrt(series_mul(A, A) - series_mul(B, B) * BigRational(4));

  const RationalSeries c0_claim = series_div(RationalSeries::constant(1, order), delta.truncated(order));
  const RationalSeries cm1_claim = series_div(A - delta, series_mul(B * BigRational(2), delta));

  const LaurentDiagonal got = laurent_diagonal_check(A.truncated(order), B.truncated(order), order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (got.c0[n] != c0_claim[n] || got.c_minus1[n] != cm1_claim[n]) return LaurentCheck{false, n};
  }
  return LaurentCheck{true, std::nullopt};
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::sum: return "sum";
    case CountMethod::jacobi: return "jacobi";
    case CountMethod::series: return "series";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& name) {
  if (name == "brute") return CountMethod::brute;
  if (name == "sum") return CountMethod::sum;
  if (name == "jacobi") return CountMethod::jacobi;
  if (name == "series") return CountMethod::series;
  throw UsageError("unknown method '" + name + "' (expected brute, sum, jacobi or series)");
}

const BigInt& CountTable::at(std::uint32_t k, std::uint32_t n) const {
  if (k < k_min || k > k_max || n < n_min || n > n_max) throw UsageError("table index out of range");
  return values[k - k_min][n - n_min];
}

bool same_values(const CountTable& a, const CountTable& b) {
  return a.k_min == b.k_min && a.k_max == b.k_max && a.n_min == b.n_min && a.n_max == b.n_max && a.values == b.values;
}

CountTable bal_kary_table(std::uint32_t k_max, std::uint32_t n_max, CountMethod method, const Budget& budget,
                          Jobs jobs) {
  check_k(k_max);
  CountTable t;
  t.k_min = 1;
  t.k_max = k_max;
  t.n_min = 0;
  t.n_max = n_max;
  t.method = method;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    std::vector<BigInt> row;
    if (method == CountMethod::series) {
      row = bal_kary_series(k, n_max);
    } else {
      for (std::uint32_t n = 0; n <= n_max; ++n) {
        switch (method) {
          case CountMethod::brute: row.push_back(bal_kary_brute({k, n}, budget, jobs)); break;
          case CountMethod::sum: row.push_back(bal_kary_sum({k, n})); break;
          case CountMethod::jacobi: row.push_back(bal_kary_jacobi({k, n})); break;
          case CountMethod::series: break;
        }
      }
    }
    t.values.push_back(std::move(row));
  }
  return t;
}

}  // namespace bwcap
