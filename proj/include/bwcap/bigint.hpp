#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bwcap {

using BigInt = mpz_class;
using BigRational = mpq_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP ui interfaces assumed 64-bit");

inline BigInt from_u64(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

inline BigInt pow_int(const BigInt& base, std::uint64_t e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// 0^0 = 1, as everywhere else in the library.
inline BigRational pow_rat(const BigRational& base, std::uint64_t e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const BigRational& q) { return q.get_den() == 1; }

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws UsageError on junk.
BigRational parse_rational(const std::string& text);
BigInt parse_integer(const std::string& text);

}  // namespace bwcap
