#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "collabdist/errors.hpp"

namespace collabdist {

using Int128 = __int128;

namespace detail {

inline Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

inline Int128 checked_negate(Int128 a) { return checked_sub(0, a); }

inline Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = checked_negate(a);
  if (b < 0) b = checked_negate(b);
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string int128_to_string(Int128 value);
std::optional<Int128> int128_from_string(std::string_view text);

}  // namespace detail

/// Exact rational number with 128-bit numerator and denominator.
///
/// Values are kept in lowest terms with a positive denominator at all
/// times, so equality is componentwise. Arithmetic whose result cannot be
/// represented throws ArithmeticOverflowError instead of wrapping.
/// Comparisons never overflow: small operands are cross-multiplied in
/// 128 bits, large ones fall back to comparing continued-fraction
/// expansions.
class Rational {
 public:
  constexpr Rational() noexcept : num_(0), den_(1) {}

  // Integers convert implicitly; they are rationals with denominator 1.
  Rational(long long value) noexcept : num_(value), den_(1) {}

  Rational(Int128 numerator, Int128 denominator) : num_(numerator), den_(denominator) {
    normalize();
  }

  Int128 numerator() const noexcept { return num_; }
  Int128 denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  bool is_negative() const noexcept { return num_ < 0; }

  Rational& operator+=(const Rational& o) {
    // a/b + c/d with g = gcd(b,d): reduces intermediates so that lowest-term
    // inputs only overflow when the result itself does not fit.
    const Int128 g = detail::gcd128(den_, o.den_);
    const Int128 b1 = den_ / g;
    const Int128 d1 = o.den_ / g;
    const Int128 num =
        detail::checked_add(detail::checked_mul(num_, d1), detail::checked_mul(o.num_, b1));
    const Int128 g2 = detail::gcd128(num, g);
    num_ = num / g2;
    den_ = detail::checked_mul(b1, o.den_ / g2);
    return *this;
  }

  Rational& operator-=(const Rational& o) {
    const Int128 g = detail::gcd128(den_, o.den_);
    const Int128 b1 = den_ / g;
    const Int128 d1 = o.den_ / g;
    const Int128 num =
        detail::checked_sub(detail::checked_mul(num_, d1), detail::checked_mul(o.num_, b1));
    const Int128 g2 = detail::gcd128(num, g);
    num_ = num / g2;
    den_ = detail::checked_mul(b1, o.den_ / g2);
    return *this;
  }

  Rational& operator*=(const Rational& o) {
    const Int128 g1 = detail::gcd128(num_, o.den_);
    const Int128 g2 = detail::gcd128(o.num_, den_);
    num_ = detail::checked_mul(num_ / g1, o.num_ / g2);
    den_ = detail::checked_mul(den_ / g2, o.den_ / g1);
    if (num_ == 0) den_ = 1;
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("rational division by zero");
    const Int128 g1 = detail::gcd128(num_, o.num_);
    const Int128 g2 = detail::gcd128(o.den_, den_);
    num_ = detail::checked_mul(num_ / g1, o.den_ / g2);
    den_ = detail::checked_mul(den_ / g2, o.num_ / g1);
    if (den_ < 0) {
      num_ = detail::checked_negate(num_);
      den_ = detail::checked_negate(den_);
    }
    if (num_ == 0) den_ = 1;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = detail::checked_negate(a.num_);
    r.den_ = a.den_;
    return r;
  }

  bool operator==(const Rational& o) const noexcept {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::strong_ordering operator<=>(const Rational& o) const noexcept {
    const int c = compare(*this, o);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or just "p" for integers.
  std::string str() const {
    return den_ == 1 ? detail::int128_to_string(num_)
                     : detail::int128_to_string(num_) + "/" + detail::int128_to_string(den_);
  }

  /// Parses "p" or "p/q" (optional leading '-'); nullopt when malformed,
  /// out of range, or q = 0.
  static std::optional<Rational> parse(std::string_view text);

 private:
  static int compare(const Rational& a, const Rational& b) noexcept {
    constexpr Int128 kFast = INT64_MAX;
    if (a.num_ <= kFast && a.num_ >= -kFast && b.num_ <= kFast && b.num_ >= -kFast &&
        a.den_ <= kFast && b.den_ <= kFast) {
      const Int128 lhs = a.num_ * b.den_;  // fits: |operands| < 2^63
      const Int128 rhs = b.num_ * a.den_;
      return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    return compare_continued_fraction(a, b);
  }

  // Exact order on arbitrarily large components: walk both continued
  // fractions until the quotients differ. The sense of the comparison flips
  // at every level because each step compares reciprocals of remainders.
  static int compare_continued_fraction(const Rational& a, const Rational& b) noexcept {
    Int128 n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
    bool flipped = false;
    for (;;) {
      Int128 q1 = n1 / d1, r1 = n1 % d1;
      if (r1 < 0) {
        r1 += d1;
        --q1;
      }
      Int128 q2 = n2 / d2, r2 = n2 % d2;
      if (r2 < 0) {
        r2 += d2;
        --q2;
      }
      if (q1 != q2) {
        const int c = q1 < q2 ? -1 : 1;
        return flipped ? -c : c;
      }
      if (r1 == 0 || r2 == 0) {
        if (r1 == r2) return 0;
        const int c = r1 == 0 ? -1 : 1;
        return flipped ? -c : c;
      }
      n1 = d1;
      d1 = r1;
      n2 = d2;
      d2 = r2;
      flipped = !flipped;
    }
  }

  void normalize() {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = detail::checked_negate(num_);
      den_ = detail::checked_negate(den_);
    }
    const Int128 g = detail::gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  Int128 num_;
  Int128 den_;  // > 0 always
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace collabdist
