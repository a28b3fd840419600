#include "bwcap/oeis.hpp"

#include <cctype>
#include <sstream>
#include <string>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "bwcap/error.hpp"
#include "bwcap/perm.hpp"
#include "oeis_embedded.hpp"

namespace bwcap::oeis {

namespace {

void check_id(std::string_view id) {
  bool ok = id.size() == 7 && id[0] == 'A';
  for (std::size_t i = 1; ok && i < id.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(id[i])) != 0;
  if (!ok) throw UsageError("not an OEIS id: '" + std::string(id) + "'");
}

}  // namespace

Snapshot parse_bfile(std::string_view sequence_id, std::string_view text, Source source) {
  Snapshot snap{std::string(sequence_id), {}, 0, source};
  std::istringstream in{std::string(text)};
  std::string line;
  std::int64_t expected = 0;
  bool first = true;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::string index_text, value_text;
    if (!(fields >> index_text >> value_text)) {
      throw UsageError("malformed b-file line for " + snap.sequence_id + ": '" + line + "'");
    }
    const std::int64_t index = std::stoll(parse_integer(index_text).get_str());
    if (first) {
      snap.offset = index;
      expected = index;
      first = false;
    }
    if (index != expected) {
      throw UsageError("b-file for " + snap.sequence_id + " skips from index " + std::to_string(expected - 1) +
                       " to " + std::to_string(index));
    }
    snap.terms.push_back(parse_integer(value_text));
    ++expected;
  }
  return snap;
}

std::vector<std::string> embedded_ids() {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < detail::kEmbeddedCount; ++i) ids.emplace_back(detail::kEmbedded[i].id);
  return ids;
}

std::optional<Snapshot> embedded_snapshot(std::string_view sequence_id) {
  for (std::size_t i = 0; i < detail::kEmbeddedCount; ++i) {
    if (sequence_id == detail::kEmbedded[i].id) {
      return parse_bfile(sequence_id, detail::kEmbedded[i].text, Source::embedded);
    }
  }
  return std::nullopt;
}

Snapshot fetch_snapshot(std::string_view sequence_id, std::chrono::seconds timeout) {
  check_id(sequence_id);
  const std::string id(sequence_id);
  const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
  httplib::SSLClient client("oeis.org");
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res) throw UnavailableError("fetching " + id + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw UnavailableError("fetching " + id + " returned HTTP " + std::to_string(res->status));
  Snapshot snap = parse_bfile(id, res->body, Source::fetched);
  if (snap.terms.empty()) throw UnavailableError("b-file for " + id + " has no terms");
  return snap;
}

Snapshot load_snapshot(std::string_view sequence_id, bool allow_fetch) {
  if (auto snap = embedded_snapshot(sequence_id)) return *snap;
  if (!allow_fetch) {
    throw UnavailableError("no embedded snapshot for " + std::string(sequence_id) + " and fetching is disabled");
  }
  return fetch_snapshot(sequence_id);
}

std::string to_string(Qualifier q) {
  switch (q) {
    case Qualifier::all_n: return "all-n";
    case Qualifier::even_n_only: return "even-n-only";
    case Qualifier::table_by_rows: return "table-by-rows";
  }
  return "?";
}

MatchReport oeis_check(const Snapshot& snapshot, const std::vector<BigInt>& values, Qualifier q) {
  MatchReport report{snapshot.sequence_id, q, 0, {}};
  auto compare = [&](std::size_t value_index, std::int64_t seq_index) {
    const std::int64_t pos = seq_index - snapshot.offset;
    if (pos < 0 || pos >= static_cast<std::int64_t>(snapshot.terms.size())) return;
    ++report.compared;
    const BigInt& expected = snapshot.terms[static_cast<std::size_t>(pos)];
    if (expected != values[value_index]) report.mismatches.push_back({value_index, expected, values[value_index]});
  };
  for (std::size_t i = 0; i < values.size(); ++i) {
    switch (q) {
      case Qualifier::all_n: compare(i, static_cast<std::int64_t>(i)); break;
      case Qualifier::even_n_only:
        if (i % 2 == 0) compare(i, static_cast<std::int64_t>(i / 2));
        break;
      // Both sides are flat lists; the first value lines up with the first term.
      case Qualifier::table_by_rows: compare(i, snapshot.offset + static_cast<std::int64_t>(i)); break;
    }
  }
  return report;
}

std::vector<BigInt> t_formula_rows(std::uint32_t n_max) {
  std::vector<BigInt> out;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (std::uint32_t m = 1; m <= n / 2 + 1; ++m) out.push_back(t_formula(n, m));
  }
  return out;
}

}  // namespace bwcap::oeis
