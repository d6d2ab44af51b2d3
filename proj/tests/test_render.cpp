#include "collabdist/render.hpp"

#include <doctest.h>

using collabdist::decimal_string;
using collabdist::fraction_string;
using collabdist::Rational;

TEST_CASE("decimal rendering rounds half-up at fixed precision") {
  CHECK(decimal_string(Rational(1, 73), 3) == "0.014");
  CHECK(decimal_string(Rational(3, 4), 3) == "0.750");
  CHECK(decimal_string(Rational(367, 146), 3) == "2.514");
  CHECK(decimal_string(Rational(513, 146), 3) == "3.514");
  CHECK(decimal_string(Rational(5, 2), 3) == "2.500");
  CHECK(decimal_string(Rational(2), 3) == "2.000");
  CHECK(decimal_string(Rational(0), 3) == "0.000");

  // Exactly-half cases round up.
  CHECK(decimal_string(Rational(1, 2), 0) == "1");
  CHECK(decimal_string(Rational(1, 4), 0) == "0");
  CHECK(decimal_string(Rational(1, 2000), 3) == "0.001");
  CHECK(decimal_string(Rational(1, 2001), 3) == "0.000");

  CHECK(decimal_string(Rational(1, 73), 5) == "0.01370");
  CHECK(decimal_string(Rational(1, 73), 6) == "0.013699");
  CHECK(decimal_string(Rational(-3, 4), 2) == "-0.75");
  CHECK(decimal_string(Rational(-1, 1000), 1) == "0.0");  // rounds to zero, no sign

  CHECK_THROWS(decimal_string(Rational(1), -1));
  CHECK_THROWS(decimal_string(Rational(1), 37));
}

TEST_CASE("fraction rendering is exact") {
  CHECK(fraction_string(Rational(3, 4)) == "3/4");
  CHECK(fraction_string(Rational(4)) == "4");
  CHECK(fraction_string(Rational(367, 146)) == "367/146");
}
