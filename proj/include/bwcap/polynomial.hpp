#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "bwcap/bigint.hpp"

namespace bwcap {

struct Exponent {
  std::uint32_t b = 0;
  std::uint32_t w = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Polynomial in the formal variables b and w with big-integer coefficients.
///
/// Terms are kept in (e_b, e_w) lexicographic order and zero coefficients are
/// never stored, so operator== is structural equality.
class BivariatePolynomial {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(const BigInt& constant);
  static BivariatePolynomial monomial(const BigInt& coeff, std::uint32_t eb, std::uint32_t ew);
  static BivariatePolynomial b() { return monomial(1, 1, 0); }
  static BivariatePolynomial w() { return monomial(1, 0, 1); }

  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] BigInt coefficient(std::uint32_t eb, std::uint32_t ew) const;

  /// Adds coeff * b^eb w^ew in place, dropping the term if it cancels.
  void add_term(const BigInt& coeff, std::uint32_t eb, std::uint32_t ew);

  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(const BigInt& scalar);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const BigInt& s) { return a *= s; }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  [[nodiscard]] BivariatePolynomial pow(std::uint32_t e) const;
  /// p(w, b).
  [[nodiscard]] BivariatePolynomial swapped() const;
  /// Multiplies by (bw)^e.
  [[nodiscard]] BivariatePolynomial shifted(std::uint32_t eb, std::uint32_t ew) const;
  /// Exact division of every coefficient; throws InconsistencyError if any remainder.
  [[nodiscard]] BivariatePolynomial divided_exactly(const BigInt& divisor) const;

  [[nodiscard]] BigRational evaluate(const BigRational& b, const BigRational& w) const;
  [[nodiscard]] BigInt coefficient_sum() const;
  [[nodiscard]] std::uint32_t max_total_degree() const noexcept;

  /// Human-readable form, e.g. "2*b^4*w^2 + 4*b^3*w^3" (highest e_b first).
  [[nodiscard]] std::string str() const;

 private:
  TermMap terms_;
};

/// [t^0] p(t, 1/t): the sum of coefficients with e_b == e_w.
[[nodiscard]] BigInt balanced_coefficient_sum(const BivariatePolynomial& p);

}  // namespace bwcap
