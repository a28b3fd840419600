#include "bwcap/polynomial.hpp"

#include <algorithm>

#include "bwcap/error.hpp"

namespace bwcap {

BivariatePolynomial::BivariatePolynomial(const BigInt& constant) { add_term(constant, 0, 0); }

BivariatePolynomial BivariatePolynomial::monomial(const BigInt& coeff, std::uint32_t eb, std::uint32_t ew) {
  BivariatePolynomial p;
  p.add_term(coeff, eb, ew);
  return p;
}

BigInt BivariatePolynomial::coefficient(std::uint32_t eb, std::uint32_t ew) const {
  auto it = terms_.find(Exponent{eb, ew});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePolynomial::add_term(const BigInt& coeff, std::uint32_t eb, std::uint32_t ew) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{eb, ew}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(c, e.b, e.w);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(-c, e.b, e.w);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  BigInt prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(prod, ea.b + eb.b, ea.w + eb.w);
    }
  }
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BivariatePolynomial operator-(const BivariatePolynomial& a) {
  BivariatePolynomial out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(std::uint32_t e) const {
  BivariatePolynomial result(1);
  BivariatePolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.w, e.b}, c);
  return out;
}

BivariatePolynomial BivariatePolynomial::shifted(std::uint32_t eb, std::uint32_t ew) const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Exponent{e.b + eb, e.w + ew}, c);
  return out;
}

BivariatePolynomial BivariatePolynomial::divided_exactly(const BigInt& divisor) const {
  if (divisor == 0) throw InconsistencyError("polynomial division by zero");
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t())) {
      throw InconsistencyError("coefficient " + c.get_str() + " not divisible by " + divisor.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    out.terms_.emplace_hint(out.terms_.end(), e, std::move(q));
  }
  return out;
}

BigRational BivariatePolynomial::evaluate(const BigRational& b, const BigRational& w) const {
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) sum += BigRational(c) * pow_rat(b, e.b) * pow_rat(w, e.w);
  return sum;
}

BigInt BivariatePolynomial::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::uint32_t BivariatePolynomial::max_total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.b + e.w);
  return d;
}

std::string BivariatePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    auto var = [&mono](const char* name, std::uint32_t power) {
      if (power == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (power > 1) mono += "^" + std::to_string(power);
    };
    var("b", e.b);
    var("w", e.w);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

BigInt balanced_coefficient_sum(const BivariatePolynomial& p) {
  BigInt sum = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e.b == e.w) sum += c;
  }
  return sum;
}

}  // namespace bwcap
