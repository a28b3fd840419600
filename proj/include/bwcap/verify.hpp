#pragma once

#include <string>
#include <vector>

#include "bwcap/budget.hpp"

namespace bwcap {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-check suites: "kary", "perm", "identities", "asymptotics", or "all".
/// Throws UsageError for any other name.
[[nodiscard]] std::vector<CheckResult> run_suite(const std::string& suite, const Budget& budget = {},
                                                 Jobs jobs = {});
[[nodiscard]] const std::vector<std::string>& suite_names();

}  // namespace bwcap
