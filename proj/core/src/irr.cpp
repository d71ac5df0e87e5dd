#include "ratecap/irr.hpp"

#include "ratecap/error.hpp"

#include <algorithm>
#include <cmath>

namespace ratecap {

namespace {

const Rational& irr_relative_width() {
  static const Rational w(1, Integer("1000000000000"));
  return w;
}

bool discounted_balance_nonpositive(std::span<const IntPoly> partials, const AlgebraicNumber& point,
                                    std::size_t skip_last) {
  for (std::size_t k = 0; k + skip_last < partials.size(); ++k)
    if (sign_at(partials[k], point) == Sign::Positive) return false;
  return true;
}

StreamClass classify_profile(const StreamAnalysis& a, std::optional<std::size_t>& irr_root) {
  const auto& gaps = a.profile.gaps;
  const bool all_pos = std::all_of(gaps.begin(), gaps.end(), [](Sign s) { return s == Sign::Positive; });
  const bool all_neg = std::all_of(gaps.begin(), gaps.end(), [](Sign s) { return s == Sign::Negative; });
  if (all_pos) return StreamClass::S4Pos;
  if (all_neg) return StreamClass::S4Neg;

  // S3: negative for small u (large rates), positive for large u, one switch.
  if (gaps.front() != Sign::Negative) return StreamClass::Outside;
  std::size_t j = 1;
  while (j < gaps.size() && gaps[j] == Sign::Negative) ++j;
  for (std::size_t i = j; i < gaps.size(); ++i)
    if (gaps[i] != Sign::Positive) return StreamClass::Outside;
  irr_root = j - 1;

  if (a.profile.roots.size() != 1) return StreamClass::S3;

  const auto txs = a.stream.transactions();
  if (txs.size() == 2 && sgn(txs[0].amount) < 0 && sgn(txs[1].amount) > 0) return StreamClass::S0;

  const auto partials = partial_sum_polys(a.stream, a.poly.q);
  if (discounted_balance_nonpositive(partials, a.profile.roots.front().value, 1)) return StreamClass::S1;
  return StreamClass::S2;
}

IrrValue finite_value(AlgebraicNumber root, std::int64_t q) {
  root.refine_relative(irr_relative_width());
  IrrValue v;
  v.kind = IrrValue::Kind::Finite;
  v.q = q;
  v.log_rate = -static_cast<double>(q) * std::log(root.approx());
  v.effective_rate = std::expm1(v.log_rate);
  v.root = std::move(root);
  return v;
}

}  // namespace

std::string_view to_string(StreamClass c) {
  switch (c) {
    case StreamClass::Zero: return "Zero";
    case StreamClass::S0: return "S0";
    case StreamClass::S1: return "S1";
    case StreamClass::S2: return "S2";
    case StreamClass::S3: return "S3";
    case StreamClass::S4Pos: return "S4Pos";
    case StreamClass::S4Neg: return "S4Neg";
    case StreamClass::Outside: return "Outside";
  }
  return "Outside";
}

bool has_finite_irr(StreamClass c) {
  return c == StreamClass::S0 || c == StreamClass::S1 || c == StreamClass::S2 || c == StreamClass::S3;
}

StreamAnalysis analyze(const CashFlowStream& x) { return analyze(x, natural_denominator(x)); }

StreamAnalysis analyze(const CashFlowStream& x, std::int64_t q) {
  StreamAnalysis a;
  a.stream = x;
  a.poly = encode(x, q);
  if (x.is_zero()) return a;
  a.int_poly = a.poly.to_int_poly();
  a.profile = sign_profile(a.int_poly);
  a.stream_class = classify_profile(a, a.irr_root);
  return a;
}

StreamClass classify_stream(const CashFlowStream& x) { return analyze(x).stream_class; }

std::optional<IrrValue> irr(const StreamAnalysis& a) {
  switch (a.stream_class) {
    case StreamClass::Zero:
    case StreamClass::Outside: return std::nullopt;
    case StreamClass::S4Pos: return IrrValue{IrrValue::Kind::PlusInfinity, std::nullopt, a.poly.q, HUGE_VAL, HUGE_VAL};
    case StreamClass::S4Neg: return IrrValue{IrrValue::Kind::MinusInfinity, std::nullopt, a.poly.q, -HUGE_VAL, -1.0};
    default: return finite_value(a.profile.roots.at(*a.irr_root).value, a.poly.q);
  }
}

std::optional<IrrValue> irr(const CashFlowStream& x) { return irr(analyze(x)); }

IrrValue pure_rate(const CashFlowStream& x) {
  const StreamAnalysis a = analyze(x);
  if (a.stream_class != StreamClass::S0 && a.stream_class != StreamClass::S1)
    throw Error(ErrorCode::NotPure, std::string("stream class ") + std::string(to_string(a.stream_class)) + " is not a pure investment");
  return *irr(a);
}

std::strong_ordering compare_irr(const IrrValue& a, const IrrValue& b) {
  const auto rank = [](const IrrValue& v) {
    return v.kind == IrrValue::Kind::MinusInfinity ? 0 : (v.kind == IrrValue::Kind::Finite ? 1 : 2);
  };
  if (rank(a) != rank(b) || rank(a) != 1) return rank(a) <=> rank(b);
  if (a.q != b.q) throw Error(ErrorCode::NotApplicable, "IRR comparison needs a common time denominator");
  // Larger rates have smaller discount factors.
  return compare(*b.root, *a.root);
}

std::strong_ordering compare_irr_to_rate(const IrrValue& a, const Rational& rho) {
  if (a.kind == IrrValue::Kind::MinusInfinity) return std::strong_ordering::less;
  if (a.kind == IrrValue::Kind::PlusInfinity) return std::strong_ordering::greater;
  const AlgebraicCutoff c = AlgebraicCutoff::make(rho, a.q);
  return compare(c.point, *a.root);
}

std::optional<std::size_t> first_positive_balance(std::span<const IntPoly> partials, const AlgebraicCutoff& cutoff) {
  for (std::size_t k = 0; k < partials.size(); ++k)
    if (sign_at(partials[k], cutoff.point) == Sign::Positive) return k;
  return std::nullopt;
}

RateBound refinement_minus(const CashFlowStream& x) {
  if (x.is_zero()) return {};
  if (x.earliest_sign() == Sign::Positive) return {RateBound::Kind::Infinite, {}, {}, HUGE_VAL};
  const std::int64_t q = natural_denominator(x);
  const auto partials = partial_sum_polys(x, q);
  const auto feasible = [&](const Rational& rho) {
    return !first_positive_balance(partials, AlgebraicCutoff::make(rho, q)).has_value();
  };
  if (feasible(Rational(0))) return {};

  // Feasible rates form an up-interval, so bracket and bisect.
  Rational lo(0), hi(1);
  while (!feasible(hi)) {
    lo = hi;
    hi *= 2;
  }
  const Rational tolerance(1, 1000000000);
  while (hi - lo > tolerance * (1 + lo)) {
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    if (feasible(mid))
      hi = std::move(mid);
    else
      lo = std::move(mid);
  }
  RateBound b{RateBound::Kind::Finite, lo, hi, 0.0};
  b.log_rate = 0.5 * (std::log1p(lo.get_d()) + std::log1p(hi.get_d()));
  return b;
}

RateBound refinement_plus(const StreamAnalysis& a) {
  if (a.stream.is_zero()) return {};
  const auto& gaps = a.profile.gaps;
  if (gaps.front() == Sign::Positive) return {RateBound::Kind::Infinite, {}, {}, HUGE_VAL};
  std::size_t j = 1;
  while (j < gaps.size() && gaps[j] != Sign::Positive) ++j;
  if (j == gaps.size()) return {};
  AlgebraicNumber onset = a.profile.roots[j - 1].value;
  if (compare(onset, Rational(1)) != std::strong_ordering::less) return {};

  onset.refine_relative(irr_relative_width());
  while (sgn(onset.lower()) <= 0) onset.refine();
  const std::int64_t q = a.poly.q;
  RateBound b;
  b.kind = RateBound::Kind::Finite;
  b.effective_lo = pow(onset.upper(), -q) - 1;
  b.effective_hi = pow(onset.lower(), -q) - 1;
  b.log_rate = -static_cast<double>(q) * std::log(onset.approx());
  return b;
}

RateBound refinement_plus(const CashFlowStream& x) { return refinement_plus(analyze(x)); }

std::optional<std::strong_ordering> compare_rate_to_bound(const Rational& rho, const RateBound& bound) {
  switch (bound.kind) {
    case RateBound::Kind::Zero: return compare(rho, Rational(0));
    case RateBound::Kind::Infinite: return std::strong_ordering::less;
    case RateBound::Kind::Finite:
      if (rho < bound.effective_lo) return std::strong_ordering::less;
      if (rho > bound.effective_hi) return std::strong_ordering::greater;
      if (bound.is_exact()) return std::strong_ordering::equal;
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace ratecap
