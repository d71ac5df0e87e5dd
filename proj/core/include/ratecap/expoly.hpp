#pragma once

#include "ratecap/algebraic.hpp"
#include "ratecap/cashflow.hpp"
#include "ratecap/polynomial.hpp"
#include "ratecap/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace ratecap {

/// The NPV of a stream after the substitution u = e^{-s/q}:
/// P(u) = sum x_k u^{n_k} with n_k = t_k q, so that P(e^{-s/q}) = F_s(x).
/// u in (0, 1] covers s >= 0 and u in (0, inf) covers all real s.
struct ExpPoly {
  std::int64_t q = 1;
  std::map<std::int64_t, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::int64_t degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
  Rational eval(const Rational& u) const;
  /// Positive integer multiple as a dense polynomial.
  IntPoly to_int_poly() const;
};

/// q = lcm of the time denominators.
ExpPoly encode(const CashFlowStream& x);
/// Encoding with a caller-chosen q; every t_k q must be an integer.
ExpPoly encode(const CashFlowStream& x, std::int64_t q);
std::int64_t natural_denominator(const CashFlowStream& x);

/// Polynomials of the running sums: entry k encodes the first k+1 transactions.
std::vector<IntPoly> partial_sum_polys(const CashFlowStream& x, std::int64_t q);

struct SquarefreeFactor {
  IntPoly factor;
  int multiplicity;
};
/// Pairwise coprime squarefree factors; the product of factor^multiplicity
/// equals p up to a constant. Constants yield an empty list.
std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& p);
std::vector<SquarefreeFactor> squarefree_decompose(const ExpPoly& p);
/// p / gcd(p, p').
IntPoly squarefree_part(const IntPoly& p);

/// Distinct real roots of squarefree p in (a, b); p(a), p(b) != 0.
int sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

enum class Parity { Odd, Even };

struct IsolatedRoot {
  /// Open isolating bracket; neither endpoint is a root.
  Rational lo;
  Rational hi;
  AlgebraicNumber value;
  int multiplicity;
  Parity parity;
};

struct RootReport {
  std::vector<IsolatedRoot> roots;
  Rational scan_bound;
};

/// Every distinct root of p in the open interval (lo, hi), ascending, with
/// multiplicity. Endpoint roots are divided out exactly, never perturbed.
RootReport isolate_roots(const IntPoly& p, const Rational& lo, const Rational& hi);

/// Power of two M >= 1 with every real root of p in (-M, M).
Rational cauchy_root_bound(const IntPoly& p);

Sign sign_at_rational(const IntPoly& p, const Rational& u);
Sign sign_at_rational(const ExpPoly& p, const Rational& u);

/// The discount factor u* = (1 + rho)^{-1/q} as the positive root of
/// (1 + rho) u^q - 1, i.e. the threshold e^{-r/q} for r = ln(1 + rho).
struct AlgebraicCutoff {
  Rational rho;
  std::int64_t q;
  IntPoly defining;
  AlgebraicNumber point;

  static AlgebraicCutoff make(const Rational& rho, std::int64_t q);
};

Sign sign_at_cutoff(const IntPoly& p, const AlgebraicCutoff& c);
/// Requires p.q == c.q.
Sign sign_at_cutoff(const ExpPoly& p, const AlgebraicCutoff& c);

std::strong_ordering compare_root_to_cutoff(const AlgebraicNumber& root, const AlgebraicCutoff& c);
/// The root of squarefree p isolated by (lo, hi) against u*.
std::strong_ordering compare_root_to_cutoff(const Rational& lo, const Rational& hi, const IntPoly& p,
                                            const AlgebraicCutoff& c);

/// Sign pattern of p over u in (0, inf): roots ascending and the sign on each
/// gap; gaps[0] is (0, first root), gaps.back() is (last root, inf).
struct SignProfile {
  std::vector<IsolatedRoot> roots;
  std::vector<Sign> gaps;
};
SignProfile sign_profile(const IntPoly& p);

}  // namespace ratecap
