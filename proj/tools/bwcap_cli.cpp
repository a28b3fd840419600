// bwcap: command-line front end for the black-white cell capacity library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bwcap/asymptotics.hpp"
#include "bwcap/bargraph.hpp"
#include "bwcap/error.hpp"
#include "bwcap/io.hpp"
#include "bwcap/kary.hpp"
#include "bwcap/oeis.hpp"
#include "bwcap/perm.hpp"
#include "bwcap/verify.hpp"

namespace {

using namespace bwcap;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Common {
  bool as_json = false;
  bool as_csv = false;
  unsigned jobs = 1;
  std::uint64_t budget = Budget{}.max_words;

  [[nodiscard]] Budget make_budget() const {
    Budget b;
    b.max_words = budget;
    return b;
  }
};

void add_common(CLI::App* cmd, Common& c, bool csv = false) {
  cmd->add_flag("--json", c.as_json, "Machine-readable JSON output");
  if (csv) cmd->add_flag("--csv", c.as_csv, "CSV output");
  cmd->add_option("--jobs", c.jobs, "Worker threads for enumeration kernels")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", c.budget, "Brute-force word budget (k^n cap)")->check(CLI::PositiveNumber);
}

int cmd_stats(const std::string& text, const Common& c) {
  const Word u = Word::parse(text);
  const CellCount cells = cell_count(u);
  const bool balanced = cells.black == cells.white;
  std::optional<std::uint64_t> od;
  if (u.is_permutation()) od = odd_displacements(u);
  if (c.as_json) {
    json j{{"word", u.str()}, {"black", cells.black.get_str()}, {"white", cells.white.get_str()},
           {"balanced", balanced}};
    if (od) j["odd_displacements"] = std::to_string(*od);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "word " << u.str() << '\n'
              << "black " << cells.black << '\n'
              << "white " << cells.white << '\n'
              << "balanced " << (balanced ? "true" : "false") << '\n';
    if (od) std::cout << "odd_displacements " << *od << '\n';
  }
  return kExitOk;
}

int cmd_table1(std::uint32_t k_max, std::uint32_t n_max, const std::string& method, const Common& c) {
  const CountTable t = bal_kary_table(k_max, n_max, parse_count_method(method), c.make_budget(), Jobs{c.jobs});
  if (c.as_json) {
    std::cout << io::to_json(t).dump() << '\n';
  } else {
    std::cout << io::to_csv(t);
  }
  return kExitOk;
}

int cmd_poly(const std::string& family, std::uint32_t k, std::uint32_t n, std::string method, const Common& c) {
  const Budget budget = c.make_budget();
  BivariatePolynomial p;
  if (family == "kary") {
    if (method.empty()) method = "product";
    if (method == "product") {
      p = f_n_kary({k, n}, budget);
    } else if (method == "gf") {
      p = F_k_coefficients(k, n, budget).back();
    } else if (method == "brute") {
      p = f_n_kary_brute({k, n}, budget, Jobs{c.jobs});
    } else {
      throw UsageError("kary poly method must be product, gf or brute");
    }
  } else if (family == "perm") {
    if (method.empty()) method = "closed";
    if (method == "closed") {
      p = f_n_perm_closed(n, budget);
    } else if (method == "jacobi") {
      p = f_n_perm_closed_jacobi(n, budget);
    } else if (method == "permanent") {
      p = f_n_perm_permanent(n, budget, Jobs{c.jobs});
    } else if (method == "brute") {
      p = f_n_perm_brute(n, budget, Jobs{c.jobs});
    } else {
      throw UsageError("perm poly method must be closed, jacobi, permanent or brute");
    }
  } else {
    throw UsageError("family must be kary or perm");
  }
  if (c.as_json) {
    std::cout << io::to_json(p).dump() << '\n';
  } else {
    std::cout << p.str() << '\n';
  }
  return kExitOk;
}

int cmd_bal(const std::string& family, std::uint32_t k, std::optional<std::uint32_t> n,
            std::optional<std::uint32_t> order, std::string method, const Common& c) {
  const Budget budget = c.make_budget();
  if (n.has_value() == order.has_value()) throw UsageError("give exactly one of --n or --order");
  if (family == "kary") {
    if (method.empty()) method = order ? "series" : "sum";
    const CountMethod m = parse_count_method(method);
    std::vector<BigInt> values;
    if (order && m == CountMethod::series) {
      values = bal_kary_series(k, *order);
    } else {
      const std::uint32_t lo = order ? 0 : *n, hi = order ? *order : *n;
      for (std::uint32_t len = lo; len <= hi; ++len) {
        switch (m) {
          case CountMethod::brute: values.push_back(bal_kary_brute({k, len}, budget, Jobs{c.jobs})); break;
          case CountMethod::sum: values.push_back(bal_kary_sum({k, len})); break;
          case CountMethod::jacobi: values.push_back(bal_kary_jacobi({k, len})); break;
          case CountMethod::series: values.push_back(bal_kary_series(k, len).back()); break;
        }
      }
    }
    if (c.as_json) {
      json arr = json::array();
      for (const auto& v : values) arr.push_back(v.get_str());
      std::cout << json{{"family", "kary"}, {"k", k}, {"method", method}, {"values", arr}}.dump() << '\n';
    } else {
      for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? "," : "") << values[i];
      std::cout << '\n';
    }
    return kExitOk;
  }
  if (family == "perm") {
    if (order) {
      const RationalSeries egf = bal_perm_egf(*order);
      if (c.as_json) {
        std::cout << io::to_json(egf).dump() << '\n';
      } else {
        for (std::size_t i = 0; i <= egf.order(); ++i) std::cout << (i ? "," : "") << egf[i];
        std::cout << '\n';
      }
      return kExitOk;
    }
    if (method.empty()) method = "closed";
    BigInt v;
    if (method == "closed") {
      v = bal_perm_closed(*n);
    } else if (method == "brute") {
      v = bal_perm_brute(*n, budget, Jobs{c.jobs});
    } else {
      throw UsageError("perm bal method must be closed or brute");
    }
    if (c.as_json) {
      std::cout << json{{"family", "perm"}, {"n", *n}, {"method", method}, {"value", v.get_str()}}.dump() << '\n';
    } else {
      std::cout << v << '\n';
    }
    return kExitOk;
  }
  throw UsageError("family must be kary or perm");
}

int cmd_census(std::uint32_t n, const Common& c) {
  const DisplacementCensus census = displacement_census(n, c.make_budget(), Jobs{c.jobs});
  if (c.as_json) {
    std::cout << io::to_json(census).dump() << '\n';
  } else {
    for (std::size_t d = 0; d < census.counts.size(); ++d) std::cout << d << ' ' << census.counts[d] << '\n';
  }
  return kExitOk;
}

int cmd_asymptotics(const std::string& claim, std::uint32_t k, std::uint32_t alpha,
                    const std::vector<std::uint32_t>& schedule, const Common& c) {
  const ConvergenceReport r = convergence_report({parse_claim(claim), k, alpha}, schedule);
  if (c.as_json) {
    std::cout << io::to_json(r).dump() << '\n';
  } else {
    std::cout << io::to_csv(r);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const Common& c) {
  const auto results = run_suite(suite, c.make_budget(), Jobs{c.jobs});
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (c.as_json) {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
      std::cout << '\n';
    }
  }
  if (c.as_json) std::cout << json{{"suite", suite}, {"passed", ok}, {"checks", arr}}.dump() << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

oeis::Qualifier parse_qualifier(const std::string& q) {
  if (q == "all-n") return oeis::Qualifier::all_n;
  if (q == "even-n-only") return oeis::Qualifier::even_n_only;
  if (q == "table-by-rows") return oeis::Qualifier::table_by_rows;
  throw UsageError("qualifier must be all-n, even-n-only or table-by-rows");
}

int cmd_oeis(const std::string& id, std::optional<std::uint32_t> k, std::string qualifier, bool strict, bool fetch,
             const Common& c) {
  const oeis::Snapshot snap = oeis::load_snapshot(id, fetch);
  std::vector<BigInt> values;
  std::uint32_t row_k = 0;
  if (id == "A226288" && !k) {
    if (qualifier.empty()) qualifier = "table-by-rows";
    values = oeis::t_formula_rows(10);
  } else {
    // Alignments for the Table 1 rows; any other id needs an explicit --k.
    if (!k) {
      if (id == "A001405") k = 2;
      if (id == "A084771") k = 3;
      if (id == "A060899") k = 4;
    }
    if (!k) throw UsageError("no default row for " + id + "; pass --k");
    row_k = *k;
    if (qualifier.empty()) qualifier = (id == "A084771" || id == "A060899") ? "even-n-only" : "all-n";
    const auto q = parse_qualifier(qualifier);
    const std::size_t needed = snap.terms.size() + static_cast<std::size_t>(std::max<std::int64_t>(snap.offset, 0));
    const std::size_t len = q == oeis::Qualifier::even_n_only ? 2 * needed : needed;
    values = bal_kary_series(row_k, static_cast<std::uint32_t>(len == 0 ? 0 : len - 1));
  }
  const oeis::MatchReport report = oeis::oeis_check(snap, values, parse_qualifier(qualifier));
  if (c.as_json) {
    json mism = json::array();
    for (const auto& m : report.mismatches) {
      mism.push_back({{"index", m.value_index}, {"expected", m.expected.get_str()}, {"actual", m.actual.get_str()}});
    }
    json j{{"sequence", id},
           {"source", snap.source == oeis::Source::embedded ? "embedded" : "fetched"},
           {"qualifier", qualifier},
           {"compared", report.compared},
           {"matched", report.matched()},
           {"mismatches", mism}};
    if (row_k != 0) j["k"] = row_k;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << id << " (" << (snap.source == oeis::Source::embedded ? "embedded" : "fetched") << ", "
              << qualifier << "): " << report.compared << " compared, " << report.mismatches.size()
              << " mismatches -> " << (report.matched() ? "match" : "MISMATCH") << '\n';
    for (const auto& m : report.mismatches) {
      std::cout << "  value[" << m.value_index << "] = " << m.actual << ", snapshot " << m.expected << '\n';
    }
  }
  return (strict && !report.matched()) ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Black-white cell capacity of k-ary words and permutations"};
  app.require_subcommand(1);

  Common common;
  int status = kExitOk;
  std::function<int()> action;

  std::string stats_word;
  auto* stats = app.add_subcommand("stats", "Black/white cells, balance and odd displacements of a word");
  stats->add_option("word", stats_word, "Digits (152322) or comma-separated letters (10,2,3)")->required();
  add_common(stats, common);
  stats->callback([&] { action = [&] { return cmd_stats(stats_word, common); }; });

  std::uint32_t t_k = 6, t_n = 10;
  std::string t_method = "sum";
  auto* table1 = app.add_subcommand("table1", "Balanced k-ary word counts for k = 1..K, n = 0..N (CSV)");
  table1->add_option("--k", t_k, "Largest alphabet size")->check(CLI::PositiveNumber);
  table1->add_option("--n", t_n, "Largest word length");
  table1->add_option("--method", t_method, "brute | sum | jacobi | series");
  add_common(table1, common, true);
  table1->callback([&] { action = [&] { return cmd_table1(t_k, t_n, t_method, common); }; });

  std::string p_family = "kary", p_method;
  std::uint32_t p_k = 2, p_n = 0;
  auto* poly = app.add_subcommand("poly", "Enumerating polynomial f_n(b, w)");
  poly->add_option("--family", p_family, "kary | perm");
  poly->add_option("--k", p_k, "Alphabet size (kary)")->check(CLI::PositiveNumber);
  poly->add_option("--n", p_n, "Length")->required();
  poly->add_option("--method", p_method, "kary: product | gf | brute; perm: closed | jacobi | permanent | brute");
  add_common(poly, common);
  poly->callback([&] { action = [&] { return cmd_poly(p_family, p_k, p_n, p_method, common); }; });

  std::string b_family = "kary", b_method;
  std::uint32_t b_k = 2;
  std::optional<std::uint32_t> b_n, b_order;
  auto* bal = app.add_subcommand("bal", "Number of bw-balanced words (single n, or 0..order)");
  bal->add_option("--family", b_family, "kary | perm");
  bal->add_option("--k", b_k, "Alphabet size (kary)")->check(CLI::PositiveNumber);
  bal->add_option("--n", b_n, "Single length");
  bal->add_option("--order", b_order, "All lengths 0..order (perm: EGF coefficients)");
  bal->add_option("--method", b_method, "kary: brute | sum | jacobi | series; perm: closed | brute");
  add_common(bal, common);
  bal->callback([&] { action = [&] { return cmd_bal(b_family, b_k, b_n, b_order, b_method, common); }; });

  std::uint32_t c_n = 0;
  auto* census = app.add_subcommand("census", "Distribution of odd displacements over S_n");
  census->add_option("--n", c_n, "Permutation size")->required();
  add_common(census, common);
  census->callback([&] { action = [&] { return cmd_census(c_n, common); }; });

  std::string a_claim = "kary_even";
  std::uint32_t a_k = 2, a_alpha = 0;
  std::vector<std::uint32_t> a_schedule{8, 40, 200, 1000};
  auto* asym = app.add_subcommand("asymptotics", "Exact values against the asymptotic estimates (CSV)");
  asym->add_option("--claim", a_claim, "kary_even | kary_odd | perm | jacobi_szego");
  asym->add_option("--k", a_k, "Alphabet size, or Jacobi argument (k^2+1)/(2k)");
  asym->add_option("--alpha", a_alpha, "Jacobi alpha (jacobi_szego)");
  asym->add_option("--schedule", a_schedule, "Comma-separated n (or m) values")->delimiter(',');
  add_common(asym, common, true);
  asym->callback([&] { action = [&] { return cmd_asymptotics(a_claim, a_k, a_alpha, a_schedule, common); }; });

  std::string v_suite = "all";
  auto* verify = app.add_subcommand("verify", "Run cross-check suites; exit 1 on any failure");
  verify->add_option("suite", v_suite, "kary | perm | identities | asymptotics | all");
  add_common(verify, common);
  verify->callback([&] { action = [&] { return cmd_verify(v_suite, common); }; });

  std::string o_id, o_qualifier;
  std::optional<std::uint32_t> o_k;
  bool o_strict = false, o_fetch = false;
  auto* oeis_cmd = app.add_subcommand("oeis", "Compare a Table 1 row or T(n,m) with an OEIS snapshot");
  oeis_cmd->add_option("id", o_id, "A001405 | A084771 | A060899 | A226288 (others with --fetch --k)")->required();
  oeis_cmd->add_option("--k", o_k, "Table 1 row to compare");
  oeis_cmd->add_option("--qualifier", o_qualifier, "all-n | even-n-only | table-by-rows");
  oeis_cmd->add_flag("--strict", o_strict, "Exit 1 on any mismatch");
  oeis_cmd->add_flag("--fetch", o_fetch, "Allow downloading the b-file when no snapshot is embedded");
  add_common(oeis_cmd, common);
  oeis_cmd->callback([&] { action = [&] { return cmd_oeis(o_id, o_k, o_qualifier, o_strict, o_fetch, common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    status = action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const UnavailableError& e) {
    std::cerr << "unavailable: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return status;
}
