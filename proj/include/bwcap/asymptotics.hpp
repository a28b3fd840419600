#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bwcap {

/// sqrt(2/(pi n)), times sqrt(k^2/(k^2-1)) for odd k: the limit shape of bal_k(n)/k^n.
[[nodiscard]] double kary_asymptotic(std::uint32_t k, std::uint32_t n);
/// sqrt(8/(pi n)) for n = 0, 3 (mod 4). Other residues are rejected (the ratio is 0 there).
[[nodiscard]] double perm_asymptotic(std::uint32_t n);

/// Large-degree estimate of P_m^{(alpha,beta)}(x) for real x > 1:
///   (sqrt(x+1)+sqrt(x-1))^{alpha+beta} (x+sqrt(x^2-1))^{m+1/2}
///   / (sqrt(2 pi m) (x^2-1)^{1/4} (x-1)^{alpha/2} (x+1)^{beta/2}).
[[nodiscard]] long double jacobi_szego_estimate(std::uint32_t m, double alpha, double beta, long double x);
/// The same estimate at x = (k^2+1)/(2k), beta = 0, after simplification:
///   k^m / sqrt(2 pi m) * sqrt(2k^2/(k^2-1)) * (2k/(k-1))^alpha.
[[nodiscard]] long double jacobi_szego_specialized(std::uint32_t m, std::uint32_t alpha, std::uint32_t k);
/// Exact rational checks of the simplifications used by jacobi_szego_specialized at
/// x = (k^2+1)/(2k): sqrt(x^2-1) = (k^2-1)/(2k), x + sqrt(x^2-1) = k,
/// (sqrt(x+1)+sqrt(x-1))^2 = 2k, x-1 = (k-1)^2/(2k), x+1 = (k+1)^2/(2k).
[[nodiscard]] bool szego_specialization_holds(std::uint32_t k);

enum class Claim { kary_even, kary_odd, perm, jacobi_szego };

[[nodiscard]] std::string to_string(Claim c);
[[nodiscard]] Claim parse_claim(const std::string& name);

struct ClaimSpec {
  Claim claim = Claim::kary_even;
  std::uint32_t k = 2;      // alphabet size (kary_*), or Jacobi argument (k^2+1)/(2k) (jacobi_szego)
  std::uint32_t alpha = 0;  // jacobi_szego only
};

struct ConvergencePoint {
  std::uint32_t n = 0;  // word length, or Jacobi degree m
  double exact_ratio = 0;
  double asymptotic_value = 0;
  double relative_error = 0;  // |exact / asymptotic - 1|
};

struct ConvergenceReport {
  ClaimSpec spec;
  std::vector<ConvergencePoint> points;

  [[nodiscard]] bool strictly_decreasing() const;
  [[nodiscard]] const ConvergencePoint& at(std::uint32_t n) const;
};

/// Exact side from the closed forms (no enumeration), converted through a
/// 256-bit float only for the final ratio. For Claim::perm each n is moved to
/// the nearest n = 0, 3 (mod 4), ties going down.
[[nodiscard]] ConvergenceReport convergence_report(const ClaimSpec& spec, const std::vector<std::uint32_t>& schedule);

}  // namespace bwcap
