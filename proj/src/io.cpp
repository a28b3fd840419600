#include "bwcap/io.hpp"

#include <cstdio>
#include <sstream>

#include "bwcap/error.hpp"

namespace bwcap::io {

json to_json(const BivariatePolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", {e.b, e.w}}, {"coeff", c.get_str()}});
  return json{{"vars", {"b", "w"}}, {"terms", std::move(terms)}};
}

BivariatePolynomial polynomial_from_json(const json& j) {
  try {
    if (j.contains("vars") && j.at("vars") != json({"b", "w"})) {
      throw UsageError("polynomial JSON must use vars [\"b\",\"w\"]");
    }
    BivariatePolynomial p;
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at("exp");
      p.add_term(parse_integer(t.at("coeff").get<std::string>()), e.at(0).get<std::uint32_t>(),
                 e.at(1).get<std::uint32_t>());
    }
    return p;
  } catch (const json::exception& ex) {
    throw UsageError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

json to_json(const RationalSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
  return json{{"var", "x"}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

RationalSeries series_from_json(const json& j) {
  try {
    const auto order = j.at("order").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != order + 1) throw UsageError("series JSON has order+1 != number of coefficients");
    RationalSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s[n] = parse_rational(coeffs.at(n).get<std::string>());
    return s;
  } catch (const json::exception& ex) {
    throw UsageError(std::string("malformed series JSON: ") + ex.what());
  }
}

json to_json(const DisplacementCensus& c) {
  json counts = json::object();
  for (std::size_t d = 0; d < c.counts.size(); ++d) counts[std::to_string(d)] = c.counts[d].get_str();
  return json{{"n", c.n}, {"counts", std::move(counts)}};
}

json to_json(const CountTable& t) {
  json rows = json::array();
  for (std::uint32_t k = t.k_min; k <= t.k_max; ++k) {
    json row = json::array();
    for (std::uint32_t n = t.n_min; n <= t.n_max; ++n) row.push_back(t.at(k, n).get_str());
    rows.push_back({{"k", k}, {"values", std::move(row)}});
  }
  return json{{"method", to_string(t.method)}, {"k_range", {t.k_min, t.k_max}}, {"n_range", {t.n_min, t.n_max}},
              {"rows", std::move(rows)}};
}

std::string to_csv(const CountTable& t) {
  std::string out = "k";
  for (std::uint32_t n = t.n_min; n <= t.n_max; ++n) out += "," + std::to_string(n);
  out += '\n';
  for (std::uint32_t k = t.k_min; k <= t.k_max; ++k) {
    out += std::to_string(k);
    for (std::uint32_t n = t.n_min; n <= t.n_max; ++n) out += "," + t.at(k, n).get_str();
    out += '\n';
  }
  return out;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json to_json(const ConvergenceReport& r) {
  json points = json::array();
  for (const auto& p : r.points) {
    points.push_back({{"n", p.n},
                      {"exact_ratio", p.exact_ratio},
                      {"asymptotic_value", p.asymptotic_value},
                      {"relative_error", p.relative_error}});
  }
  json j{{"claim", to_string(r.spec.claim)}, {"points", std::move(points)}};
  if (r.spec.claim != Claim::perm) j["k"] = r.spec.k;
  if (r.spec.claim == Claim::jacobi_szego) j["alpha"] = r.spec.alpha;
  return j;
}

std::string to_csv(const ConvergenceReport& r) {
  std::string out = "claim,n,exact_ratio,asymptotic_value,relative_error\n";
  for (const auto& p : r.points) {
    out += to_string(r.spec.claim) + "," + std::to_string(p.n) + "," + fmt_double(p.exact_ratio) + "," +
           fmt_double(p.asymptotic_value) + "," + fmt_double(p.relative_error) + "\n";
  }
  return out;
}

}  // namespace bwcap::io
