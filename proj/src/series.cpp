#include "bwcap/series.hpp"

#include <algorithm>
#include <string>

#include "bwcap/error.hpp"
#include "bwcap/special_functions.hpp"

namespace bwcap {

RationalSeries::RationalSeries(std::size_t order) : coeffs_(order + 1) {}

RationalSeries::RationalSeries(std::size_t order, std::initializer_list<BigRational> leading)
    : RationalSeries(order, std::vector<BigRational>(leading)) {}

RationalSeries::RationalSeries(std::size_t order, std::vector<BigRational> leading) : coeffs_(order + 1) {
  // Terms beyond the truncation order are dropped.
  const std::size_t n = std::min(leading.size(), coeffs_.size());
  std::move(leading.begin(), leading.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

RationalSeries RationalSeries::constant(const BigRational& c, std::size_t order) {
  RationalSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

RationalSeries RationalSeries::monomial(const BigRational& c, std::size_t power, std::size_t order) {
  RationalSeries s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

std::size_t RationalSeries::valuation() const noexcept {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] != 0) return n;
  }
  return coeffs_.size();
}

RationalSeries RationalSeries::truncated(std::size_t order) const {
  RationalSeries s(std::min(order, this->order()));
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  RationalSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries series_div(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const std::size_t shift = b.valuation();
  if (shift > order) throw DivisibilityError("division by the zero series");
  for (std::size_t n = 0; n < shift; ++n) {
    if (a[n] != 0) {
      throw DivisibilityError("numerator coefficient of x^" + std::to_string(n) +
                              " is nonzero but the divisor has valuation " + std::to_string(shift));
    }
  }
  // a = x^s a', b = x^s b' with b'[0] != 0; quotient q = a'/b' known to order - s.
  const std::size_t qorder = order - shift;
  RationalSeries q(qorder);
  const BigRational& lead = b[shift];
  for (std::size_t n = 0; n <= qorder; ++n) {
    BigRational acc = a[n + shift];
    for (std::size_t i = 1; i <= n; ++i) acc -= b[i + shift] * q[n - i];
    q[n] = acc / lead;
  }
  return q;
}

RationalSeries series_sqrt(const RationalSeries& a) {
  if (a[0] != 1) {
    throw UnsupportedBranchError("series_sqrt needs constant term 1, got " + a[0].get_str());
  }
  // s^2 = a  =>  2 s_n = a_n - sum_{i=1}^{n-1} s_i s_{n-i}.
  RationalSeries s(a.order());
  s[0] = 1;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    BigRational acc = a[n];
    for (std::size_t i = 1; i < n; ++i) acc -= s[i] * s[n - i];
    s[n] = acc / 2;
  }
  return s;
}

LaurentDiagonal laurent_diagonal_check(const RationalSeries& A, const RationalSeries& B, std::size_t order) {
  if (order > kLaurentMaxOrder) {
    throw BudgetError("laurent expansion order " + std::to_string(order) + " exceeds bound " +
                      std::to_string(kLaurentMaxOrder));
  }
  if (A.order() < order || B.order() < order) throw UsageError("input series shorter than requested order");
  if (A[0] == 0) throw DivisibilityError("A must have a nonzero constant term");
  if (B[0] != 0) throw UsageError("B must have zero constant term for a finite expansion per x-order");

  const RationalSeries a = A.truncated(order);
  const RationalSeries b = B.truncated(order);
  const RationalSeries inv_a = series_div(RationalSeries::constant(1, order), a);
  const std::size_t vb = b.valuation();

  LaurentDiagonal out{RationalSeries(order), RationalSeries(order)};
  if (vb > order) {  // B vanishes to this order
    out.c0 = inv_a;
    return out;
  }
  // term_j = B^j / A^{j+1}; (t + 1/t)^j contributes C(j, j/2) to t^0 (j even)
  // and C(j, (j-1)/2) to t^{-1} (j odd). B^j = O(x^{j vb}) bounds j.
  RationalSeries term = inv_a;
  for (std::size_t j = 0; j * vb <= order; ++j) {
    if (j % 2 == 0) {
      out.c0 += term * BigRational(binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(j / 2)));
    } else {
      out.c_minus1 +=
          term * BigRational(binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>((j - 1) / 2)));
    }
    term = series_mul(series_mul(term, b), inv_a);
  }
  return out;
}

}  // namespace bwcap
