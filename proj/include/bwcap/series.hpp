#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bwcap/bigint.hpp"

namespace bwcap {

/// Power series in x truncated after x^order, with exact rational coefficients.
///
/// Results of binary operations carry the smaller of the two operand orders.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order);
  RationalSeries(std::size_t order, std::initializer_list<BigRational> leading);
  RationalSeries(std::size_t order, std::vector<BigRational> leading);

  static RationalSeries constant(const BigRational& c, std::size_t order);
  /// c * x^power.
  static RationalSeries monomial(const BigRational& c, std::size_t power, std::size_t order);

  [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] const BigRational& operator[](std::size_t n) const { return coeffs_.at(n); }
  BigRational& operator[](std::size_t n) { return coeffs_.at(n); }
  [[nodiscard]] const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  [[nodiscard]] std::size_t valuation() const noexcept;
  [[nodiscard]] RationalSeries truncated(std::size_t order) const;

  RationalSeries& operator+=(const RationalSeries& rhs);
  RationalSeries& operator-=(const RationalSeries& rhs);
  RationalSeries& operator*=(const BigRational& s);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(RationalSeries a, const BigRational& s) { return a *= s; }
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<BigRational> coeffs_;
};

[[nodiscard]] RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);

/// a / b. If b has valuation v > 0, a must have at least v leading zeros; the
/// quotient then has order min(a.order(), b.order()) - v.
[[nodiscard]] RationalSeries series_div(const RationalSeries& a, const RationalSeries& b);

/// The square root with constant term +1. Requires a[0] == 1.
[[nodiscard]] RationalSeries series_sqrt(const RationalSeries& a);

/// c0 and c_{-1}, as series in x, of the Laurent expansion in t of 1/(A - B(t + 1/t)).
struct LaurentDiagonal {
  RationalSeries c0;
  RationalSeries c_minus1;
};

inline constexpr std::size_t kLaurentMaxOrder = 256;

/// Expands 1/(A - B(t + 1/t)) = sum_j B^j (t + 1/t)^j / A^{j+1} coefficient-wise
/// in t. Needs A[0] != 0 and B[0] == 0 so each x-order gets finitely many j.
/// Throws BudgetError above kLaurentMaxOrder.
[[nodiscard]] LaurentDiagonal laurent_diagonal_check(const RationalSeries& A, const RationalSeries& B,
                                                     std::size_t order);

}  // namespace bwcap
