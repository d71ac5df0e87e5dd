#include "ratecap/caps.hpp"

#include "ratecap/error.hpp"
#include "ratecap/expoly.hpp"
#include "ratecap/irr.hpp"

#include <cmath>

namespace ratecap {

namespace {

const AlgebraicNumber& smaller(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return compare(a, b) == std::strong_ordering::less ? a : b;
}

const AlgebraicNumber& larger(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return compare(a, b) == std::strong_ordering::greater ? a : b;
}

double log_rate_of(const Rational& u, std::int64_t q) { return -static_cast<double>(q) * std::log(u.get_d()); }

RateWindow make_window(Rational lo, Rational hi, Rational sample, std::int64_t q, Sign sign) {
  RateWindow w;
  w.q = q;
  w.s_lo = log_rate_of(hi, q);
  w.s_hi = log_rate_of(lo, q);
  w.s_sample = log_rate_of(sample, q);
  w.u_lo = std::move(lo);
  w.u_hi = std::move(hi);
  w.u_sample = std::move(sample);
  w.sign = sign;
  return w;
}

RateWindow window_inside(const AlgebraicNumber& a, const AlgebraicNumber& b, std::int64_t q, Sign sign) {
  RationalWindow w = window_between(a, b);
  return make_window(std::move(w.lo), std::move(w.hi), std::move(w.sample), q, sign);
}

Decision approximate(bool legal, Rule rule, const RateSpec& rate, const OracleVerdict& v) {
  Decision d{legal, rule, rate, std::monostate{}, Mode::Approximate, false, std::nullopt};
  if (v.violation_found) d.witness = ApproxViolation{v.s, v.npv};
  return d;
}

Decision exact_decision(bool legal, Rule rule, const RateSpec& rate) {
  return Decision{legal, rule, rate, std::monostate{}, Mode::Exact, false, std::nullopt};
}

/// Index of the first transaction whose discounted running balance is positive.
std::optional<std::size_t> cap_minus_breach(const CashFlowStream& x, const Rational& rho) {
  if (x.is_zero()) return std::nullopt;
  const std::int64_t q = natural_denominator(x);
  const auto partials = partial_sum_polys(x, q);
  return first_positive_balance(partials, AlgebraicCutoff::make(rho, q));
}

bool all_integer_times(const CashFlowStream& x) {
  for (const auto& tx : x.transactions())
    if (tx.time.get_den() != 1) return false;
  return true;
}

}  // namespace

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::CapPlus: return "cap_plus";
    case Rule::CapMinus: return "cap_minus";
    case Rule::WeakCap: return "weak_cap";
    case Rule::Floor: return "floor";
  }
  return "cap_plus";
}

std::string_view to_string(Mode m) { return m == Mode::Exact ? "exact" : "approximate"; }

std::string_view to_string(OrientedSide s) {
  switch (s) {
    case OrientedSide::AsGiven: return "as_given";
    case OrientedSide::Negated: return "negated";
    case OrientedSide::Neither: return "neither";
  }
  return "neither";
}

std::string_view to_string(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::PartyX: return "party_x";
    case Fault::PartyY: return "party_y";
    case Fault::Both: return "both";
  }
  return "none";
}

Decision in_cap_plus(const CashFlowStream& x, const RateSpec& rate, const ScanConfig& scan) {
  if (!rate.is_exact()) {
    const OracleVerdict v = oracle_in_cap_plus(x, rate.log_rate(), scan);
    return approximate(!v.violation_found, Rule::CapPlus, rate, v);
  }
  Decision d = exact_decision(true, Rule::CapPlus, rate);
  if (x.is_zero()) return d;

  const StreamAnalysis a = analyze(x);
  const AlgebraicCutoff cutoff = AlgebraicCutoff::make(rate.effective_rate(), a.poly.q);
  const auto& roots = a.profile.roots;
  const auto& gaps = a.profile.gaps;
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    if (gaps[j] != Sign::Positive) continue;
    const AlgebraicNumber start = j == 0 ? AlgebraicNumber::rational(Rational(0)) : roots[j - 1].value;
    if (j > 0 && compare(start, cutoff.point) != std::strong_ordering::less) break;
    const AlgebraicNumber& end = j < roots.size() ? smaller(roots[j].value, cutoff.point) : cutoff.point;
    d.legal = false;
    d.witness = window_inside(start, end, a.poly.q, Sign::Positive);
    return d;
  }
  return d;
}

Decision in_cap_minus(const CashFlowStream& x, const RateSpec& rate) {
  if (!rate.is_exact()) {
    const OracleVerdict v = oracle_in_cap_minus(x, rate.log_rate());
    return approximate(!v.violation_found, Rule::CapMinus, rate, v);
  }
  Decision d = exact_decision(true, Rule::CapMinus, rate);
  if (const auto breach = cap_minus_breach(x, rate.effective_rate())) {
    d.legal = false;
    d.breach_time = x.transactions()[*breach].time;
    return d;
  }
  if (!x.is_zero() && all_integer_times(x)) d.witness = pure_dominator_witness(x, rate);
  return d;
}

Decision in_weak_cap(const CashFlowStream& x, const RateSpec& rate) {
  if (!rate.is_exact()) {
    const OracleVerdict v = oracle_in_weak_cap(x, rate.log_rate());
    return approximate(!v.violation_found, Rule::WeakCap, rate, v);
  }
  Decision d = exact_decision(true, Rule::WeakCap, rate);
  if (x.is_zero()) return d;
  const ExpPoly p = encode(x);
  const AlgebraicCutoff cutoff = AlgebraicCutoff::make(rate.effective_rate(), p.q);
  const SignCertificate cert = certify_sign(p.to_int_poly(), cutoff.point);
  if (cert.sign != Sign::Positive) return d;
  d.legal = false;
  Rational lo = cert.point.lower();
  Rational hi = cert.point.upper();
  Rational mid = (lo + hi) / 2;
  d.witness = make_window(std::move(lo), std::move(hi), std::move(mid), p.q, Sign::Positive);
  return d;
}

Decision in_floor(const CashFlowStream& x, const RateSpec& rate, const ScanConfig& scan) {
  if (!rate.is_exact()) {
    if (rate.log_rate() < 0.0) throw Error(ErrorCode::InvalidRate, "floor rate must be nonnegative");
    const OracleVerdict v = oracle_in_floor(x, rate.log_rate(), scan);
    return approximate(!v.violation_found, Rule::Floor, rate, v);
  }
  const Rational& rho = rate.effective_rate();
  if (sgn(rho) < 0) throw Error(ErrorCode::InvalidRate, "floor rate must be nonnegative");
  Decision d = exact_decision(true, Rule::Floor, rate);
  if (x.is_zero()) return d;

  const std::int64_t q = natural_denominator(x);
  if (sgn(rho) == 0) {
    if (sgn(x.total()) < 0) {
      d.legal = false;
      d.witness = make_window(Rational(1), Rational(1), Rational(1), q, Sign::Negative);
    }
    return d;
  }

  const StreamAnalysis a = analyze(x, q);
  const AlgebraicCutoff cutoff = AlgebraicCutoff::make(rho, q);
  const AlgebraicNumber one = AlgebraicNumber::rational(Rational(1));
  const auto& roots = a.profile.roots;
  const auto& gaps = a.profile.gaps;
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    if (gaps[j] != Sign::Negative) continue;
    if (j > 0 && compare(roots[j - 1].value, one) != std::strong_ordering::less) break;
    if (j < roots.size() && compare(roots[j].value, cutoff.point) != std::strong_ordering::greater) continue;
    const AlgebraicNumber& lo = j == 0 ? cutoff.point : larger(roots[j - 1].value, cutoff.point);
    const AlgebraicNumber& hi = j < roots.size() ? smaller(roots[j].value, one) : one;
    d.legal = false;
    d.witness = window_inside(lo, hi, q, Sign::Negative);
    return d;
  }
  return d;
}

JointDecision joint_classify(const CashFlowStream& x, const RateSpec& floor_rate, const RateSpec& cap_rate,
                             const ScanConfig& scan) {
  const bool floor_above_cap = floor_rate.is_exact() && cap_rate.is_exact()
                                   ? floor_rate.effective_rate() > cap_rate.effective_rate()
                                   : floor_rate.log_rate() > cap_rate.log_rate();
  if (floor_above_cap) throw Error(ErrorCode::InvalidConfig, "floor rate exceeds cap rate");
  const bool floor_negative =
      floor_rate.is_exact() ? sgn(floor_rate.effective_rate()) < 0 : floor_rate.log_rate() < 0.0;
  if (floor_negative) throw Error(ErrorCode::InvalidConfig, "floor rate must be nonnegative");

  const CashFlowStream neg = negate(x);
  JointDecision j{false,
                  OrientedSide::Neither,
                  Fault::None,
                  Mode::Exact,
                  in_floor(x, floor_rate, scan),
                  in_cap_plus(x, cap_rate, scan),
                  in_floor(neg, floor_rate, scan),
                  in_cap_plus(neg, cap_rate, scan)};
  const bool fx = j.floor_given.legal, cx = j.cap_given.legal;
  const bool fn = j.floor_negated.legal, cn = j.cap_negated.legal;
  for (const Decision* d : {&j.floor_given, &j.cap_given, &j.floor_negated, &j.cap_negated})
    if (d->mode == Mode::Approximate) j.mode = Mode::Approximate;

  if (fx && cx) {
    j.legal = true;
    j.oriented_side = OrientedSide::AsGiven;
    return j;
  }
  if (fn && cn) {
    j.legal = true;
    j.oriented_side = OrientedSide::Negated;
    return j;
  }
  const bool x_at_fault = (fx && !cx) || (!fn && cn);
  const bool y_at_fault = (fn && !cn) || (!fx && cx);
  if (x_at_fault && !y_at_fault)
    j.at_fault = Fault::PartyX;
  else if (y_at_fault && !x_at_fault)
    j.at_fault = Fault::PartyY;
  else
    j.at_fault = Fault::Both;
  return j;
}

CashFlowStream pure_dominator_witness(const CashFlowStream& x, const RateSpec& rate) {
  if (x.is_zero()) throw Error(ErrorCode::NotApplicable, "the zero stream has no dominating pure loan");
  if (!rate.is_exact()) throw Error(ErrorCode::NonExactFactor, "a float rate has no exact compounding factor");
  if (!all_integer_times(x))
    throw Error(ErrorCode::NonExactFactor, "compounding factor is irrational for fractional periods");
  const Rational& rho = rate.effective_rate();
  if (cap_minus_breach(x, rho)) throw Error(ErrorCode::NotInCapMinus, "stream is not in N_-(r)");

  const Rational growth = 1 + rho;
  Rational balance(0);
  for (const auto& tx : x.transactions()) balance += tx.amount * pow(growth, -tx.time.get_num().get_si());
  const Rational next = x.maturity() + 1;
  Rational correction = -balance * pow(growth, next.get_num().get_si());
  correction.canonicalize();
  return combine(x, CashFlowStream::normalize({{next, correction}}));
}

Decision relative_classify(const CashFlowStream& x, [[maybe_unused]] const BenchmarkPath& b,
                           const RateSpec& cap_rate, const ScanConfig& scan) {
  Decision d = in_cap_plus(x, cap_rate, scan);
  d.relative = true;
  return d;
}

Decision audit_floating_loan(const CashFlowStream& xb, const BenchmarkPath& b, const RateSpec& cap_rate,
                             const ScanConfig& scan) {
  return relative_classify(inverse_float_transform(xb, b), b, cap_rate, scan);
}

}  // namespace ratecap
