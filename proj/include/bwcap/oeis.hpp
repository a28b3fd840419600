#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bwcap/bigint.hpp"

namespace bwcap::oeis {

enum class Source { embedded, fetched };

struct Snapshot {
  std::string sequence_id;
  std::vector<BigInt> terms;
  std::int64_t offset = 0;  // index of terms[0]
  Source source = Source::embedded;
};

/// Parses b-file text: "index value" per line, '#' comments and blank lines skipped.
/// Indices must be consecutive.
[[nodiscard]] Snapshot parse_bfile(std::string_view sequence_id, std::string_view text, Source source);

/// Ids with a snapshot compiled into the library.
[[nodiscard]] std::vector<std::string> embedded_ids();
[[nodiscard]] std::optional<Snapshot> embedded_snapshot(std::string_view sequence_id);

/// Downloads https://oeis.org/<id>/b<digits>.txt. Throws UnavailableError on any failure.
[[nodiscard]] Snapshot fetch_snapshot(std::string_view sequence_id,
                                      std::chrono::seconds timeout = std::chrono::seconds(10));

/// Embedded data first; live fetch only when allow_fetch is set and nothing is embedded.
[[nodiscard]] Snapshot load_snapshot(std::string_view sequence_id, bool allow_fetch);

enum class Qualifier {
  all_n,          // values[n] vs a(n)
  even_n_only,    // values[2m] vs a(m)
  table_by_rows,  // values (already flattened by rows) vs terms in order
};

[[nodiscard]] std::string to_string(Qualifier q);

struct Mismatch {
  std::size_t value_index = 0;
  BigInt expected;  // from the snapshot
  BigInt actual;
};

struct MatchReport {
  std::string sequence_id;
  Qualifier qualifier = Qualifier::all_n;
  std::size_t compared = 0;
  std::vector<Mismatch> mismatches;

  [[nodiscard]] bool matched() const noexcept { return compared > 0 && mismatches.empty(); }
};

[[nodiscard]] MatchReport oeis_check(const Snapshot& snapshot, const std::vector<BigInt>& values, Qualifier q);

/// T(n, m) for n = 1..n_max, m = 1..floor(n/2)+1, flattened by rows.
[[nodiscard]] std::vector<BigInt> t_formula_rows(std::uint32_t n_max);

}  // namespace bwcap::oeis
