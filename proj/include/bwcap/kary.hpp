#pragma once

// Black-white cell capacity of k-ary words.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bwcap/bigint.hpp"
#include "bwcap/budget.hpp"
#include "bwcap/polynomial.hpp"

namespace bwcap {

struct KaryParams {
  std::uint32_t k = 1;
  std::uint32_t n = 0;
};

/// sum_{h=1}^{k} b^{ceil(h/2)} w^{floor(h/2)}: one letter at an odd position.
[[nodiscard]] BivariatePolynomial g_k(std::uint32_t k);

/// f_n = (g_k(b,w) g_k(w,b))^{floor(n/2)} [* g_k(b,w) if n odd].
[[nodiscard]] BivariatePolynomial f_n_kary(KaryParams p, const Budget& budget = {});

/// f_n by exhaustive enumeration of [k]^n in lexicographic order.
[[nodiscard]] BivariatePolynomial f_n_kary_brute(KaryParams p, const Budget& budget = {}, Jobs jobs = {});

/// x^0..x^order coefficients of (1 + x g) / (1 - x^2 g g'), expanded through
/// the recurrence F_n = [n==0] + [n==1] g + g g' F_{n-2}.
[[nodiscard]] std::vector<BivariatePolynomial> F_k_coefficients(std::uint32_t k, std::uint32_t order,
                                                                const Budget& budget = {});

[[nodiscard]] BigInt bal_kary_brute(KaryParams p, const Budget& budget = {}, Jobs jobs = {});
[[nodiscard]] BigInt bal_kary_sum(KaryParams p);
[[nodiscard]] BigInt bal_kary_jacobi(KaryParams p);
/// BAL_k(x) coefficients 0..order from the square-root closed form (k >= 2)
/// or 1/(1-x^2) (k = 1).
[[nodiscard]] std::vector<BigInt> bal_kary_series(std::uint32_t k, std::uint32_t order);

/// Size of the class of balanced words with exactly r odd letters at odd positions:
/// C(ceil(n/2), r) C(floor(n/2), r) ceil(k/2)^{2r} floor(k/2)^{n-2r}.
[[nodiscard]] BigInt bal_kary_class_size(KaryParams p, std::uint32_t r);
/// The same classes counted by brute force, indexed by r.
[[nodiscard]] std::vector<BigInt> bal_kary_classes_brute(KaryParams p, const Budget& budget = {},
                                                         Jobs jobs = {});

struct LaurentCheck {
  bool ok = true;
  std::optional<std::size_t> first_mismatch;  // x-order of the first failing coefficient
};

/// Checks c0 = 1/Delta_k and c_{-1} = (A - Delta_k)/(2 B Delta_k) up to order.
[[nodiscard]] LaurentCheck laurent_claims_check(std::uint32_t k, std::uint32_t order);

enum class CountMethod { brute, sum, jacobi, series };

[[nodiscard]] std::string to_string(CountMethod m);
[[nodiscard]] CountMethod parse_count_method(const std::string& name);

/// bal_k(n) over a (k, n) rectangle, tagged with the method that produced it.
struct CountTable {
  std::uint32_t k_min = 1, k_max = 1;
  std::uint32_t n_min = 0, n_max = 0;
  CountMethod method = CountMethod::sum;
  std::vector<std::vector<BigInt>> values;  // values[k - k_min][n - n_min]

  [[nodiscard]] const BigInt& at(std::uint32_t k, std::uint32_t n) const;
};

/// Same rectangle and same grid; the method tag is ignored.
[[nodiscard]] bool same_values(const CountTable& a, const CountTable& b);

[[nodiscard]] CountTable bal_kary_table(std::uint32_t k_max, std::uint32_t n_max, CountMethod method,
                                        const Budget& budget = {}, Jobs jobs = {});

}  // namespace bwcap
