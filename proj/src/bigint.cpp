#include "bwcap/bigint.hpp"

#include <cctype>

#include "bwcap/error.hpp"

namespace bwcap {

namespace {

bool is_decimal(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_integer(const std::string& text) {
  if (!is_decimal(text)) throw UsageError("not a decimal integer: '" + text + "'");
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator: '" + text + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace bwcap
