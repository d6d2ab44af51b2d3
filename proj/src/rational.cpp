#include "collabdist/rational.hpp"

namespace collabdist::detail {

std::string int128_to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Collect digits on the unsigned magnitude so INT128_MIN works too.
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
               : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<unsigned>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

std::optional<Int128> int128_from_string(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-') {
    negative = true;
    i = 1;
    if (text.size() == 1) return std::nullopt;
  }
  Int128 value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    Int128 next;
    if (__builtin_mul_overflow(value, Int128(10), &next)) return std::nullopt;
    if (__builtin_add_overflow(next, Int128(negative ? -(c - '0') : (c - '0')), &next))
      return std::nullopt;
    value = next;
  }
  return value;
}

}  // namespace collabdist::detail

namespace collabdist {

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::optional<Int128> num;
  std::optional<Int128> den;
  if (slash == std::string_view::npos) {
    num = detail::int128_from_string(text);
    den = 1;
  } else {
    num = detail::int128_from_string(text.substr(0, slash));
    den = detail::int128_from_string(text.substr(slash + 1));
  }
  if (!num || !den || *den == 0) return std::nullopt;
  if (*den < 0) return std::nullopt;  // the textual form is p/q with q > 0
  try {
    return Rational(*num, *den);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace collabdist
