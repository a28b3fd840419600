#include "bwcap/bargraph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "bwcap/error.hpp"

namespace bwcap {

namespace {

void check_positive(std::int64_t i, std::int64_t h) {
  if (i < 1) throw UsageError("column index must be >= 1, got " + std::to_string(i));
  if (h < 1) throw UsageError("column height must be >= 1, got " + std::to_string(h));
}

Letter parse_letter(std::string_view token) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last || value > UINT32_MAX) {
    throw UsageError("malformed letter '" + std::string(token) + "'");
  }
  return static_cast<Letter>(value);
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == 0) {
      throw UsageError("letter at position " + std::to_string(i + 1) + " is 0; letters must be >= 1");
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      letters.push_back(parse_letter(text.substr(start, end - start)));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw UsageError(std::string("malformed word character '") + c + "'");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
  }
  return Word(std::move(letters));
}

Letter Word::at(std::size_t position) const {
  if (position < 1 || position > letters_.size()) throw UsageError("position out of range");
  return letters_[position - 1];
}

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

bool Word::is_permutation() const noexcept {
  std::vector<bool> seen(letters_.size() + 1, false);
  for (Letter x : letters_) {
    if (x > letters_.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Word Word::concat(const Word& tail) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

std::string Word::str() const {
  const bool single_digits = std::all_of(letters_.begin(), letters_.end(), [](Letter x) { return x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!single_digits && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::uint64_t black_at(std::int64_t i, std::int64_t h) {
  check_positive(i, h);
  const auto hh = static_cast<std::uint64_t>(h);
  return (i % 2 == 1) ? (hh + 1) / 2 : hh / 2;
}

std::uint64_t white_at(std::int64_t i, std::int64_t h) {
  check_positive(i, h);
  const auto hh = static_cast<std::uint64_t>(h);
  return (i % 2 == 1) ? hh / 2 : (hh + 1) / 2;
}

CellCount cell_count(const Word& u) {
  const auto raw = detail::raw_cell_count(u.letters());
  return CellCount{from_u64(raw.black), from_u64(raw.white)};
}

bool is_bw_balanced(const Word& u) {
  const auto raw = detail::raw_cell_count(u.letters());
  return raw.black == raw.white;
}

std::uint64_t odd_displacements(const Word& p) {
  if (!p.is_permutation()) throw UsageError("'" + p.str() + "' is not a permutation");
  return detail::raw_odd_displacements(p.letters());
}

}  // namespace bwcap
