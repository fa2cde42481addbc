#include "budgetagg/rational.hpp"

#include <charconv>

#include "budgetagg/errors.hpp"

namespace budgetagg {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) {
    throw InvalidInput("rational '" + std::string(text) + "' needs a positive denominator");
  }
  return Rat(num, den);
}

std::string to_string(const Rat& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::int64_t floor_of(const Rat& value) {
  const auto num = value.numerator();
  const auto den = value.denominator();
  auto q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rat& value) {
  const auto q = floor_of(value);
  return value.denominator() == 1 ? q : q + 1;
}

}  // namespace budgetagg
