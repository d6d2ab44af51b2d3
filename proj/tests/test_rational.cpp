#include "collabdist/rational.hpp"

#include <doctest.h>

#include <map>

using collabdist::ArithmeticOverflowError;
using collabdist::Error;
using collabdist::Int128;
using collabdist::Rational;

TEST_CASE("construction normalizes to lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 4) == Rational(3, 4));
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(5, 2) + Rational(1, 73) == Rational(367, 146));
  CHECK(Rational(367, 146) + Rational(1) == Rational(513, 146));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("comparisons are a total order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2) > Rational(3, 2));
  CHECK(Rational(1, 73) < Rational(1, 72));
  CHECK(Rational(7, 3) != Rational(7, 4));

  // Large components exercise the continued-fraction path.
  const Int128 big = Int128(1) << 100;
  CHECK(Rational(big, big + 1) < Rational(1));
  CHECK(Rational(big + 1, big) > Rational(1));
  CHECK(Rational(big + 1, big) < Rational(big + 2, big));
  CHECK(Rational(big, big + 1) == Rational(big, big + 1));
  CHECK(Rational(-(big + 1), big) < Rational(-1));

  std::map<Rational, int> ordered;
  ordered[Rational(1, 2)] = 1;
  ordered[Rational(1, 3)] = 2;
  ordered[Rational(2, 3)] = 3;
  CHECK(ordered.begin()->first == Rational(1, 3));
  CHECK(ordered.rbegin()->first == Rational(2, 3));
}

TEST_CASE("overflow raises instead of wrapping") {
  const Rational huge(Int128(1) << 126, 1);
  CHECK_THROWS_AS(huge + huge, ArithmeticOverflowError);
  CHECK_THROWS_AS(huge * Rational(3), ArithmeticOverflowError);
}

TEST_CASE("string round trips") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(2).str() == "2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-1, 2).str() == "-1/2");

  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("5/2") == Rational(5, 2));
  CHECK(Rational::parse("1/73") == Rational(1, 73));
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("x"));
  CHECK(!Rational::parse("1/"));
  CHECK(!Rational::parse("/2"));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("1.5"));
  CHECK(!Rational::parse("2/-3"));
}
