#pragma once

// Canonical JSON / CSV forms. All big numbers are decimal strings in JSON.

#include <string>

#include <nlohmann/json.hpp>

#include "bwcap/asymptotics.hpp"
#include "bwcap/bargraph.hpp"
#include "bwcap/kary.hpp"
#include "bwcap/perm.hpp"
#include "bwcap/polynomial.hpp"
#include "bwcap/series.hpp"

namespace bwcap::io {

using nlohmann::json;

/// {"vars":["b","w"],"terms":[{"exp":[eb,ew],"coeff":"c"}, ...]} sorted by (eb, ew).
[[nodiscard]] json to_json(const BivariatePolynomial& p);
[[nodiscard]] BivariatePolynomial polynomial_from_json(const json& j);

/// {"var":"x","order":N,"coeffs":["p/q", ...]}; integral coefficients print without "/1".
[[nodiscard]] json to_json(const RationalSeries& s);
[[nodiscard]] RationalSeries series_from_json(const json& j);

/// {"n":n,"counts":{"d":"count",...}}
[[nodiscard]] json to_json(const DisplacementCensus& c);

[[nodiscard]] json to_json(const CountTable& t);
/// Header "k,n0,n1,..." then one row per k; plain decimal integers, '\n' line ends.
[[nodiscard]] std::string to_csv(const CountTable& t);

[[nodiscard]] json to_json(const ConvergenceReport& r);
[[nodiscard]] std::string to_csv(const ConvergenceReport& r);

}  // namespace bwcap::io
