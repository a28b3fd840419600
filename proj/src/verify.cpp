#include "bwcap/verify.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "bwcap/asymptotics.hpp"
#include "bwcap/error.hpp"
#include "bwcap/kary.hpp"
#include "bwcap/oeis.hpp"
#include "bwcap/perm.hpp"
#include "bwcap/special_functions.hpp"

namespace bwcap {

namespace {

using Results = std::vector<CheckResult>;

void record(Results& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

// Fixed seed: verify output is reproducible run to run.
BigRational sample_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 25);
  return make_rational(num(rng), den(rng));
}

void kary_suite(Results& out, const Budget& budget, Jobs jobs) {
  std::string first_bad;
  std::size_t skipped = 0;
  for (std::uint32_t k = 1; k <= 6; ++k) {
    const auto series = bal_kary_series(k, 10);
    for (std::uint32_t n = 0; n <= 10; ++n) {
      const BigInt s = bal_kary_sum({k, n});
      bool ok = s == bal_kary_jacobi({k, n}) && s == series[n];
      try {
        ok = ok && s == bal_kary_brute({k, n}, budget, jobs);
      } catch (const BudgetError&) {
        ++skipped;
      }
      if (!ok && first_bad.empty()) first_bad = "k=" + std::to_string(k) + " n=" + std::to_string(n);
    }
  }
  record(out, "kary.four_way_agreement", first_bad.empty(),
         first_bad.empty() ? std::to_string(skipped) + " brute entries over budget" : "first mismatch at " + first_bad);

  first_bad.clear();
  for (std::uint32_t k = 7; k <= 12 && first_bad.empty(); ++k) {
    const auto series = bal_kary_series(k, 14);
    for (std::uint32_t n = 0; n <= 14; ++n) {
      const BigInt s = bal_kary_sum({k, n});
      if (s != bal_kary_jacobi({k, n}) || s != series[n]) {
        first_bad = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        break;
      }
    }
  }
  record(out, "kary.closed_forms_k_le_12", first_bad.empty(), first_bad);

  first_bad.clear();
  for (std::uint32_t k = 1; k <= 4 && first_bad.empty(); ++k) {
    const auto gf = F_k_coefficients(k, 8, budget);
    for (std::uint32_t n = 0; n <= 8; ++n) {
      const auto brute = f_n_kary_brute({k, n}, budget, jobs);
      if (gf[n] != brute || f_n_kary({k, n}, budget) != brute ||
          brute.evaluate(1, 1) != BigRational(pow_int(k, n))) {
        first_bad = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        break;
      }
    }
  }
  record(out, "kary.generating_function", first_bad.empty(), first_bad);

  first_bad.clear();
  for (std::uint32_t k = 2; k <= 5; ++k) {
    const auto check = laurent_claims_check(k, 8);
    if (!check.ok && first_bad.empty()) {
      first_bad = "k=" + std::to_string(k) + " order " + std::to_string(*check.first_mismatch);
    }
  }
  record(out, "kary.laurent_coefficients", first_bad.empty(), first_bad);

  first_bad.clear();
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint32_t n = 0; n <= 8; ++n) {
      const auto classes = bal_kary_classes_brute({k, n}, budget, jobs);
      for (std::uint32_t r = 0; r < classes.size(); ++r) {
        if (classes[r] != bal_kary_class_size({k, n}, r) && first_bad.empty()) {
          first_bad = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
        }
      }
    }
  }
  record(out, "kary.per_r_classes", first_bad.empty(), first_bad);
}

void perm_suite(Results& out, const Budget& budget, Jobs jobs) {
  std::string first_bad;
  for (std::uint32_t n = 0; n <= 8; ++n) {
    const auto brute = f_n_perm_brute(n, budget, jobs);
    if (brute != f_n_perm_closed(n, budget) || brute != f_n_perm_closed_jacobi(n, budget) ||
        brute != f_n_perm_permanent(n, budget, jobs)) {
      first_bad = "n=" + std::to_string(n);
      break;
    }
  }
  record(out, "perm.triple_agreement", first_bad.empty(), first_bad);

  first_bad.clear();
  for (std::uint32_t n = 0; n <= 8; ++n) {
    const BigInt closed = bal_perm_closed(n);
    const bool census_ok = n == 0 || displacement_census(n, budget, jobs).counts[(n + 1) / 2] == closed;
    if (closed != bal_perm_brute(n, budget, jobs) || !census_ok) {
      first_bad = "n=" + std::to_string(n);
      break;
    }
  }
  record(out, "perm.balanced_count", first_bad.empty(), first_bad);

  first_bad.clear();
  for (std::uint32_t n = 1; n <= 8 && first_bad.empty(); ++n) {
    const auto census = displacement_census(n, budget, jobs);
    for (std::uint32_t d = 0; d <= n; ++d) {
      const BigInt expected = d % 2 == 0 ? t_formula(n, d / 2 + 1) : BigInt(0);
      if (census.counts[d] != expected) {
        first_bad = "n=" + std::to_string(n) + " d=" + std::to_string(d);
        break;
      }
    }
  }
  record(out, "perm.displacement_census", first_bad.empty(), first_bad);

  const auto snap = oeis::embedded_snapshot("A226288");
  const auto report = oeis::oeis_check(*snap, oeis::t_formula_rows(10), oeis::Qualifier::table_by_rows);
  record(out, "perm.oeis_A226288", report.matched(), std::to_string(report.compared) + " terms compared");

  const auto egf = bal_perm_egf(24);
  first_bad.clear();
  for (std::uint32_t n = 0; n <= 24; ++n) {
    if (egf[n] != make_rational(bal_perm_closed(n), factorial(n))) {
      first_bad = "n=" + std::to_string(n);
      break;
    }
  }
  record(out, "perm.egf", first_bad.empty(), first_bad);

  std::mt19937_64 rng(20240607);
  first_bad.clear();
  for (std::uint32_t n = 1; n <= 7 && first_bad.empty(); ++n) {
    for (std::uint32_t m = 0; m <= n; ++m) {
      std::vector<BigRational> v(n);
      for (auto& x : v) x = sample_rational(rng);
      std::vector<ColumnKind> kinds(n, ColumnKind::v);
      for (std::uint32_t j = 0; j < m; ++j) kinds[j] = ColumnKind::ones;
      std::shuffle(kinds.begin(), kinds.end(), rng);
      if (permanent(ones_v_matrix(kinds, v), budget, jobs) != lemma1_formula(n, m, v)) {
        first_bad = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        break;
      }
    }
  }
  record(out, "perm.lemma_permanent", first_bad.empty(), first_bad);
}

void identity_suite(Results& out) {
  std::mt19937_64 rng(1301);
  std::string first_bad;
  for (std::uint32_t n = 0; n <= 10 && first_bad.empty(); ++n) {
    for (std::uint32_t a = 0; a <= 3; ++a) {
      for (std::uint32_t b = 0; b <= 3; ++b) {
        for (int trial = 0; trial < 20; ++trial) {
          BigRational x = sample_rational(rng);
          if (x == 1) x = 2;
          if (jacobi_identity_lhs(n, a, b, x) != jacobi_identity_rhs(n, a, b, x)) {
            first_bad = "n=" + std::to_string(n) + " alpha=" + std::to_string(a) + " beta=" + std::to_string(b);
          }
          if (jacobi_eval({n, a, b, x}) != jacobi_eval_explicit({n, a, b, x}) && first_bad.empty()) {
            first_bad = "recurrence vs explicit sum at n=" + std::to_string(n);
          }
        }
      }
    }
  }
  record(out, "identities.jacobi_binomial_sum", first_bad.empty(), first_bad);

  first_bad.clear();
  for (std::uint32_t m = 0; m <= 20; ++m) {
    const BigRational a = sample_rational(rng);
    if (pochhammer(a, 2 * m) != pow_rat(4, m) * pochhammer(a / 2, m) * pochhammer((a + 1) / 2, m)) {
      first_bad = "m=" + std::to_string(m);
      break;
    }
  }
  record(out, "identities.duplication", first_bad.empty(), first_bad);

  first_bad.clear();
  const auto stream = g_series_terms(7);
  for (std::uint32_t m = 0; m <= 6; ++m) {
    const BigRational g = g_series_coefficient(m);
    const bool ok = g == stream[m].value && g == make_rational(bal_perm_closed(4 * m), factorial(4 * m)) &&
                    (m == 0 || g == make_rational(bal_perm_closed(4 * m - 1), factorial(4 * m - 1)));
    if (!ok) {
      first_bad = "m=" + std::to_string(m);
      break;
    }
  }
  record(out, "identities.hypergeometric_terms", first_bad.empty(), first_bad);
}

void asymptotic_suite(Results& out) {
  const std::vector<std::uint32_t> schedule{8, 40, 200, 1000};
  auto judge = [&](const std::string& name, const ConvergenceReport& r, std::uint32_t mid, std::uint32_t last) {
    const bool ok = r.strictly_decreasing() && r.at(mid).relative_error < 0.05 && r.at(last).relative_error < 0.01;
    record(out, name, ok, "error at " + std::to_string(last) + " = " + std::to_string(r.at(last).relative_error));
  };
  judge("asymptotics.kary_even_k2", convergence_report({Claim::kary_even, 2, 0}, schedule), 200, 1000);
  judge("asymptotics.kary_odd_k3", convergence_report({Claim::kary_odd, 3, 0}, schedule), 200, 1000);
  judge("asymptotics.kary_odd_k5", convergence_report({Claim::kary_odd, 5, 0}, schedule), 200, 1000);
  judge("asymptotics.perm", convergence_report({Claim::perm, 0, 0}, schedule), 200, 1000);
  for (std::uint32_t alpha = 0; alpha <= 1; ++alpha) {
    judge("asymptotics.szego_k3_alpha" + std::to_string(alpha),
          convergence_report({Claim::jacobi_szego, 3, alpha}, {10, 50, 250}), 50, 250);
  }
  bool simplifications = true;
  for (std::uint32_t k : {3u, 5u, 7u, 9u}) simplifications = simplifications && szego_specialization_holds(k);
  record(out, "asymptotics.szego_simplifications", simplifications);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kary", "perm", "identities", "asymptotics", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const Budget& budget, Jobs jobs) {
  Results out;
  const bool all = suite == "all";
  if (!all && suite != "kary" && suite != "perm" && suite != "identities" && suite != "asymptotics") {
    throw UsageError("unknown suite '" + suite + "' (expected kary, perm, identities, asymptotics or all)");
  }
  if (all || suite == "kary") kary_suite(out, budget, jobs);
  if (all || suite == "perm") perm_suite(out, budget, jobs);
  if (all || suite == "identities") identity_suite(out);
  if (all || suite == "asymptotics") asymptotic_suite(out);
  return out;
}

}  // namespace bwcap
