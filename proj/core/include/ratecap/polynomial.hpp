#pragma once

#include "ratecap/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ratecap {

/// Dense univariate polynomial with integer coefficients; index = exponent.
///
/// Most callers only care about signs and roots, so the kernel works with
/// primitive representatives (content removed, positive multiples allowed).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  /// Positive integer multiple of the rational polynomial sum coeffs[n] u^n.
  static IntPoly from_rational(std::span<const Rational> coeffs);
  /// u - v scaled to integers (the defining polynomial of a rational point).
  static IntPoly linear_root(const Rational& v);
  static IntPoly monomial(const Integer& c, std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t n) const;
  const Integer& leading() const { return coeffs_.back(); }
  /// Smallest exponent with a nonzero coefficient; requires !is_zero().
  std::size_t lowest_exponent() const;
  std::size_t term_count() const;

  IntPoly derivative() const;
  /// Divides by the (positive) content.
  IntPoly primitive() const;
  /// Divides by u^k; the low k coefficients must be zero.
  IntPoly shift_down(std::size_t k) const;

  Integer content() const;

  /// Exact value at a rational point.
  Rational eval(const Rational& u) const;
  Sign sign_at(const Rational& u) const;
  /// Sign of p(u) for u -> +infinity / u -> -infinity.
  Sign sign_at_plus_infinity() const;
  Sign sign_at_minus_infinity() const;

  /// Bounds of p on [lo, hi] for 0 <= lo <= hi, from the monotonicity of each
  /// term u^n on the nonnegative axis. Returns (lower, upper).
  std::pair<Rational, Rational> bounds_on(const Rational& lo, const Rational& hi) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a = quot * b + rem.
struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
};
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);

/// Primitive q with a = c * q * b for a rational c > 0 or c < 0; throws if b does not divide a.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// Primitive greatest common divisor with positive leading coefficient (zero if both zero).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Sturm sequence p, p', -rem(...), ... with every member a positive multiple
/// of the classical one, so sign variations are unchanged.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  std::size_t length() const { return chain_.size(); }
  std::span<const IntPoly> members() const { return chain_; }

  int variations_at(const Rational& u) const;
  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;

  /// Distinct real roots in the open interval (a, b); requires a < b and p(a), p(b) != 0.
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<IntPoly> chain_;
};

}  // namespace ratecap
