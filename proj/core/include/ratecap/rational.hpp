#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ratecap {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(int s) { return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero); }
inline Sign sign_of(const Integer& v) { return sign_of(sgn(v)); }
inline Sign sign_of(const Rational& v) { return sign_of(sgn(v)); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

std::string_view to_string(Sign s);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Parses "12", "-0.25", "1.5e3", "366/365" exactly. No binary floating point is involved.
Rational parse_rational(std::string_view text);

/// Parses a percentage such as "60%", "60" or "12.5%" into the fraction 3/5, 3/5, 1/8.
Rational parse_percent(std::string_view text);

/// Canonical text form: "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& v);

Rational pow(const Rational& base, std::int64_t exponent);

/// Exact q-th root of a positive rational when it exists.
std::optional<Rational> exact_root(const Rational& value, std::uint64_t q);

/// Smallest power of two (as a rational) that is >= value; value > 0.
Rational power_of_two_ceil(const Rational& value);

inline double to_double(const Rational& v) { return v.get_d(); }

/// Exact rational image of a finite double.
Rational from_double(double v);

}  // namespace ratecap
