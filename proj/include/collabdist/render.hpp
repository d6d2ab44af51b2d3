#pragma once

#include <string>

#include "collabdist/rational.hpp"

namespace collabdist {

/// "p/q", or "p" for integers. Always exact.
std::string fraction_string(const Rational& value);

/// Fixed-point rendering with exactly `precision` digits after the point,
/// rounded half-up (1/73 at precision 3 is "0.014"). Exact integer
/// arithmetic throughout; precision must lie in [0, 36].
std::string decimal_string(const Rational& value, int precision);

}  // namespace collabdist
