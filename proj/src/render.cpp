#include "collabdist/render.hpp"

#include <stdexcept>

namespace collabdist {

std::string fraction_string(const Rational& value) { return value.str(); }

std::string decimal_string(const Rational& value, int precision) {
  if (precision < 0 || precision > 36)
    throw std::invalid_argument("decimal precision must lie in [0, 36]");

  Int128 num = value.numerator();
  const Int128 den = value.denominator();
  const bool negative = num < 0;
  if (negative) num = detail::checked_negate(num);

  Int128 scale = 1;
  for (int i = 0; i < precision; ++i) scale = detail::checked_mul(scale, 10);

  const Int128 scaled = detail::checked_mul(num, scale);
  Int128 q = scaled / den;
  const Int128 r = scaled % den;
  if (r >= den - r) ++q;  // half-up on the magnitude, overflow-free

  std::string digits = detail::int128_to_string(q);
  if (precision > 0) {
    if (digits.size() <= static_cast<std::size_t>(precision))
      digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  }
  return negative && q != 0 ? "-" + digits : digits;
}

}  // namespace collabdist
