#pragma once

#include "ratecap/polynomial.hpp"
#include "ratecap/rational.hpp"

#include <compare>
#include <optional>

namespace ratecap {

/// A real algebraic number: either an exact rational, or the unique root of a
/// squarefree integer polynomial inside an open rational bracket (lo, hi)
/// whose endpoints are not roots. Refinement narrows the bracket and never
/// changes the value.
class AlgebraicNumber {
 public:
  static AlgebraicNumber rational(const Rational& v);

  /// defining must be squarefree with exactly one root in (lo, hi) and a sign
  /// change across it. Degree-one definitions collapse to an exact rational.
  AlgebraicNumber(IntPoly defining, Rational lo, Rational hi);

  bool is_rational() const { return exact_.has_value(); }
  const std::optional<Rational>& exact() const { return exact_; }
  const IntPoly& defining() const { return defining_; }
  /// Bracket bounds; both equal the value when rational.
  const Rational& lower() const { return exact_ ? *exact_ : lo_; }
  const Rational& upper() const { return exact_ ? *exact_ : hi_; }
  Rational width() const { return upper() - lower(); }

  /// One bisection step; may discover that the value is the midpoint.
  void refine();
  /// Bisect until upper - lower <= width.
  void refine_to(const Rational& width);
  /// Bisect until the bracket width is at most rel * lower.
  void refine_relative(const Rational& rel);

  double approx() const;

 private:
  AlgebraicNumber() = default;

  IntPoly defining_;
  Rational lo_;
  Rational hi_;
  Sign sign_lo_ = Sign::Zero;
  std::optional<Rational> exact_;
};

/// Exact sign of p at a point; p(value) == 0 is detected through a gcd with
/// the defining polynomial, every other case by bracket refinement until the
/// interval bound of p excludes zero. Requires the bracket to lie in [0, inf).
struct SignCertificate {
  Sign sign;
  /// The point with a bracket narrow enough that p keeps this sign on it
  /// (when sign != Zero).
  AlgebraicNumber point;
};
SignCertificate certify_sign(const IntPoly& p, AlgebraicNumber point);

inline Sign sign_at(const IntPoly& p, const AlgebraicNumber& point) { return certify_sign(p, point).sign; }

/// Exact comparison of two nonnegative algebraic numbers.
std::strong_ordering compare(AlgebraicNumber a, AlgebraicNumber b);

std::strong_ordering compare(AlgebraicNumber a, const Rational& b);

/// A closed rational window [lo, hi] strictly between a < b, with a sample.
struct RationalWindow {
  Rational lo;
  Rational hi;
  Rational sample;
};
RationalWindow window_between(AlgebraicNumber a, AlgebraicNumber b);

}  // namespace ratecap
