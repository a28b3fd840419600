#include "bwcap/asymptotics.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include "bwcap/bigint.hpp"
#include "bwcap/error.hpp"
#include "bwcap/kary.hpp"
#include "bwcap/perm.hpp"
#include "bwcap/special_functions.hpp"

namespace bwcap {

namespace {

constexpr mp_bitcnt_t kFloatBits = 256;

mpf_class to_float(const BigRational& q) {
  mpf_class out(0, kFloatBits);
  mpf_set_q(out.get_mpf_t(), q.get_mpq_t());
  return out;
}

ConvergencePoint make_point(std::uint32_t n, const mpf_class& exact, double asymptotic) {
  mpf_class ratio(exact, kFloatBits);
  ratio /= mpf_class(asymptotic, kFloatBits);
  ratio -= 1;
  return ConvergencePoint{n, exact.get_d(), asymptotic, std::fabs(ratio.get_d())};
}

std::uint32_t nearest_perm_residue(std::uint32_t n) {
  if (n < 3) return 3;
  switch (n % 4) {
    case 1: return n - 1;
    case 2: return n + 1;
    default: return n;
  }
}

}  // namespace

double kary_asymptotic(std::uint32_t k, std::uint32_t n) {
  if (k < 2) throw UsageError("kary_asymptotic needs k >= 2");
  if (n < 1) throw UsageError("kary_asymptotic needs n >= 1");
  double v = std::sqrt(2.0 / (std::numbers::pi * n));
  if (k % 2 == 1) {
    const double kk = static_cast<double>(k) * k;
    v *= std::sqrt(kk / (kk - 1.0));
  }
  return v;
}

double perm_asymptotic(std::uint32_t n) {
  if (n < 3 || (n % 4 != 0 && n % 4 != 3)) {
    throw UsageError("perm_asymptotic needs n = 0 or 3 (mod 4) and n >= 3, got " + std::to_string(n));
  }
  return std::sqrt(8.0 / (std::numbers::pi * n));
}

long double jacobi_szego_estimate(std::uint32_t m, double alpha, double beta, long double x) {
  if (!(x > 1.0L)) throw UsageError("jacobi_szego_estimate needs x > 1");
  if (m < 1) throw UsageError("jacobi_szego_estimate needs m >= 1");
  const long double root_sum = std::sqrt(x + 1.0L) + std::sqrt(x - 1.0L);
  const long double growth = x + std::sqrt(x * x - 1.0L);
  const long double num = std::pow(root_sum, static_cast<long double>(alpha + beta)) *
                          std::pow(growth, static_cast<long double>(m) + 0.5L);
  const long double den = std::sqrt(2.0L * std::numbers::pi_v<long double> * m) * std::pow(x * x - 1.0L, 0.25L) *
                          std::pow(x - 1.0L, static_cast<long double>(alpha) / 2.0L) *
                          std::pow(x + 1.0L, static_cast<long double>(beta) / 2.0L);
  return num / den;
}

long double jacobi_szego_specialized(std::uint32_t m, std::uint32_t alpha, std::uint32_t k) {
  if (k < 2) throw UsageError("jacobi_szego_specialized needs k >= 2");
  if (m < 1) throw UsageError("jacobi_szego_specialized needs m >= 1");
  const long double kk = k;
  return std::pow(kk, static_cast<long double>(m)) / std::sqrt(2.0L * std::numbers::pi_v<long double> * m) *
         std::sqrt(2.0L * kk * kk / (kk * kk - 1.0L)) * std::pow(2.0L * kk / (kk - 1.0L), static_cast<long double>(alpha));
}

bool szego_specialization_holds(std::uint32_t k) {
  if (k < 2) throw UsageError("szego_specialization_holds needs k >= 2");
  const BigInt kk = k;
  const BigRational x = make_rational(kk * kk + 1, 2 * kk);
  const BigRational root = make_rational(kk * kk - 1, 2 * kk);  // candidate sqrt(x^2 - 1), positive
  const bool root_ok = root > 0 && root * root == x * x - 1;
  const bool growth_ok = x + root == BigRational(kk);
  // (sqrt(x+1) + sqrt(x-1))^2 = 2x + 2 sqrt(x^2-1).
  const bool root_sum_ok = 2 * x + 2 * root == BigRational(2 * kk);
  const bool lower_ok = x - 1 == make_rational((kk - 1) * (kk - 1), 2 * kk);
  const bool upper_ok = x + 1 == make_rational((kk + 1) * (kk + 1), 2 * kk);
  return root_ok && growth_ok && root_sum_ok && lower_ok && upper_ok;
}

std::string to_string(Claim c) {
  switch (c) {
    case Claim::kary_even: return "kary_even";
    case Claim::kary_odd: return "kary_odd";
    case Claim::perm: return "perm";
    case Claim::jacobi_szego: return "jacobi_szego";
  }
  return "?";
}

Claim parse_claim(const std::string& name) {
  if (name == "kary_even") return Claim::kary_even;
  if (name == "kary_odd") return Claim::kary_odd;
  if (name == "perm") return Claim::perm;
  if (name == "jacobi_szego") return Claim::jacobi_szego;
  throw UsageError("unknown claim '" + name + "' (expected kary_even, kary_odd, perm or jacobi_szego)");
}

bool ConvergenceReport::strictly_decreasing() const {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].relative_error < points[i - 1].relative_error)) return false;
  }
  return true;
}

const ConvergencePoint& ConvergenceReport::at(std::uint32_t n) const {
  for (const auto& p : points) {
    if (p.n == n) return p;
  }
  throw UsageError("no convergence point at n = " + std::to_string(n));
}

ConvergenceReport convergence_report(const ClaimSpec& spec, const std::vector<std::uint32_t>& schedule) {
  ConvergenceReport report{spec, {}};
  switch (spec.claim) {
    case Claim::kary_even:
    case Claim::kary_odd:
      if ((spec.k % 2 == 0) != (spec.claim == Claim::kary_even)) {
        throw UsageError("k = " + std::to_string(spec.k) + " has the wrong parity for " + to_string(spec.claim));
      }
      break;
    case Claim::jacobi_szego:
    case Claim::perm:
      break;
  }
  for (std::uint32_t n : schedule) {
    switch (spec.claim) {
      case Claim::kary_even:
      case Claim::kary_odd: {
        const BigRational exact = make_rational(bal_kary_jacobi({spec.k, n}), pow_int(spec.k, n));
        report.points.push_back(make_point(n, to_float(exact), kary_asymptotic(spec.k, n)));
        break;
      }
      case Claim::perm: {
        const std::uint32_t nn = nearest_perm_residue(n);
        const BigRational exact = make_rational(bal_perm_closed(nn), factorial(nn));
        report.points.push_back(make_point(nn, to_float(exact), perm_asymptotic(nn)));
        break;
      }
      case Claim::jacobi_szego: {
        if (spec.k < 2) throw UsageError("jacobi_szego needs k >= 2");
        const BigRational x = make_rational(BigInt(spec.k) * spec.k + 1, BigInt(2) * spec.k);
        const BigRational exact = jacobi_eval(JacobiQuery{n, spec.alpha, 0, x});
        const long double est = jacobi_szego_estimate(n, spec.alpha, 0.0, static_cast<long double>(x.get_d()));
        if (!(est < static_cast<long double>(DBL_MAX))) {
          throw BudgetError("Szego estimate at m = " + std::to_string(n) + " overflows double");
        }
        report.points.push_back(make_point(n, to_float(exact), static_cast<double>(est)));
        break;
      }
    }
  }
  return report;
}

}  // namespace bwcap
