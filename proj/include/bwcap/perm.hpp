#pragma once

// Black-white cell capacity of permutations.
//
// The k-ary and permutation families both have an "f_n"; here they are
// f_n_kary (kary.hpp) and f_n_perm_*.

#include <cstdint>
#include <span>
#include <vector>

#include "bwcap/bigint.hpp"
#include "bwcap/budget.hpp"
#include "bwcap/matrix.hpp"
#include "bwcap/polynomial.hpp"
#include "bwcap/series.hpp"

namespace bwcap {

/// M_ij = b^{ceil(j/2)} w^{floor(j/2)} for odd i, b^{floor(j/2)} w^{ceil(j/2)} for even i.
/// perm(M) is the enumerating polynomial of S_n.
[[nodiscard]] StructuredMatrix<BivariatePolynomial> theorem_matrix(std::uint32_t n);

/// Columns of kind `ones` are the all-ones vector, columns of kind `v` equal v.
[[nodiscard]] StructuredMatrix<BigRational> ones_v_matrix(std::span<const ColumnKind> kinds,
                                                          std::span<const BigRational> v);

/// Ryser permanent. Gray-code subset order for rationals, plain subset order for polynomials.
[[nodiscard]] BigRational permanent(const StructuredMatrix<BigRational>& a, const Budget& budget = {},
                                    Jobs jobs = {});
[[nodiscard]] BivariatePolynomial permanent(const StructuredMatrix<BivariatePolynomial>& a,
                                            const Budget& budget = {}, Jobs jobs = {});

/// m! (n-m)! e_{n-m}(v), the permanent of any matrix with m all-ones columns and n-m columns v.
[[nodiscard]] BigRational lemma1_formula(std::uint32_t n, std::uint32_t m, std::span<const BigRational> v);

[[nodiscard]] BivariatePolynomial f_n_perm_brute(std::uint32_t n, const Budget& budget = {}, Jobs jobs = {});
/// Closed form, expanded through the subtraction-free binomial sum
/// (bw)^{floor(n^2/4)} floor(n/2)! ceil(n/2)! sum_r C(floor(n/2),r) C(ceil(n/2),r) b^{ceil(n/2)-r} w^r.
[[nodiscard]] BivariatePolynomial f_n_perm_closed(std::uint32_t n, const Budget& budget = {});
/// Closed form, expanded literally: (bw)^{floor(n^2/4)} floor(n/2)! ceil(n/2)! b^alpha
/// (w-b)^m P_m^{(alpha,0)}((w+b)/(w-b)), with the homogenised Jacobi recurrence.
[[nodiscard]] BivariatePolynomial f_n_perm_closed_jacobi(std::uint32_t n, const Budget& budget = {});
/// perm(theorem_matrix(n)).
[[nodiscard]] BivariatePolynomial f_n_perm_permanent(std::uint32_t n, const Budget& budget = {}, Jobs jobs = {});

[[nodiscard]] BigInt bal_perm_closed(std::uint32_t n);
[[nodiscard]] BigInt bal_perm_brute(std::uint32_t n, const Budget& budget = {}, Jobs jobs = {});

/// sum_n bal(n)/n! x^n = ((1+x) G(x) - 1)/x, truncated after x^order.
[[nodiscard]] RationalSeries bal_perm_egf(std::uint32_t order);

/// floor(n/2)! ceil(n/2)! C(floor(n/2), m-1) C(ceil(n/2), m-1).
[[nodiscard]] BigInt t_formula(std::uint32_t n, std::uint32_t m);

struct DisplacementCensus {
  std::uint32_t n = 0;
  std::vector<BigInt> counts;  // counts[d], d = 0..n

  [[nodiscard]] BigInt total() const;
  friend bool operator==(const DisplacementCensus&, const DisplacementCensus&) = default;
};

[[nodiscard]] DisplacementCensus displacement_census(std::uint32_t n, const Budget& budget = {},
                                                     Jobs jobs = {});

}  // namespace bwcap
