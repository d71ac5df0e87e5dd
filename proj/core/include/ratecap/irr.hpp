#pragma once

#include "ratecap/algebraic.hpp"
#include "ratecap/cashflow.hpp"
#include "ratecap/expoly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace ratecap {

/// Finest position of a stream in the IRR hierarchy S0 < S1 < S2 < S3 < S4.
enum class StreamClass { Zero, S0, S1, S2, S3, S4Pos, S4Neg, Outside };

std::string_view to_string(StreamClass c);

/// True when the class carries a finite IRR (S0 through S3).
bool has_finite_irr(StreamClass c);

struct IrrValue {
  enum class Kind { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Finite;
  /// The root u0 of P with rate = -q ln u0 (Finite only).
  std::optional<AlgebraicNumber> root;
  std::int64_t q = 1;
  double log_rate = 0.0;
  double effective_rate = 0.0;
};

/// Everything the classifiers and caps need about one stream, computed once.
struct StreamAnalysis {
  CashFlowStream stream;
  ExpPoly poly;
  IntPoly int_poly;
  /// Empty for the zero stream.
  SignProfile profile;
  StreamClass stream_class = StreamClass::Zero;
  /// Index into profile.roots of the IRR root (S0..S3).
  std::optional<std::size_t> irr_root;
};

StreamAnalysis analyze(const CashFlowStream& x);
/// Same, with a caller-chosen time denominator (a multiple of the natural one).
StreamAnalysis analyze(const CashFlowStream& x, std::int64_t q);

StreamClass classify_stream(const CashFlowStream& x);

/// I4: finite on S0..S3, +inf on S4Pos, -inf on S4Neg, nullopt for Zero and Outside.
std::optional<IrrValue> irr(const CashFlowStream& x);
std::optional<IrrValue> irr(const StreamAnalysis& a);

/// I1, defined on S0 and S1 only; throws ErrorCode::NotPure otherwise.
IrrValue pure_rate(const CashFlowStream& x);

/// Order of two finite IRRs (exact). Both must share the time denominator.
std::strong_ordering compare_irr(const IrrValue& a, const IrrValue& b);

/// irr(x) <= rate, decided exactly against the cutoff.
std::strong_ordering compare_irr_to_rate(const IrrValue& a, const Rational& rho);

/// Value of a refinement in [0, +inf], with an effective-rate bracket.
struct RateBound {
  enum class Kind { Zero, Finite, Infinite };
  Kind kind = Kind::Zero;
  /// Effective-rate bracket [lo, hi] (lo == hi when exact); Finite only.
  Rational effective_lo;
  Rational effective_hi;
  double log_rate = 0.0;

  bool is_exact() const { return kind != Kind::Finite || effective_lo == effective_hi; }
};

/// W(x) = inf{r >= 0 : x_r in L_-}; W(0) = 0.
RateBound refinement_minus(const CashFlowStream& x);

/// inf{r >= 0 : F_s(x) <= 0 for all s >= r}, the unique refinement of the conventional IRR.
RateBound refinement_plus(const CashFlowStream& x);
RateBound refinement_plus(const StreamAnalysis& a);

/// rate > bound ? greater : ...; nullopt when rate falls inside a non-exact bracket.
std::optional<std::strong_ordering> compare_rate_to_bound(const Rational& rho, const RateBound& bound);

/// Index of the first running sum that is positive at u*, or nullopt when the
/// discounted balance stays nonpositive (x_r in L_-). partials come from
/// partial_sum_polys with the cutoff's q.
std::optional<std::size_t> first_positive_balance(std::span<const IntPoly> partials, const AlgebraicCutoff& cutoff);

}  // namespace ratecap
