#pragma once

#include "ratecap/cashflow.hpp"
#include "ratecap/discounting.hpp"
#include "ratecap/oracle.hpp"
#include "ratecap/rational.hpp"

#include <optional>
#include <string_view>
#include <variant>

namespace ratecap {

enum class Rule { CapPlus, CapMinus, WeakCap, Floor };
enum class Mode { Exact, Approximate };

std::string_view to_string(Rule r);
std::string_view to_string(Mode m);

/// A closed window of discount factors on which P has a constant nonzero sign,
/// with the matching log-rate window s = -q ln u (s_lo pairs with u_hi).
struct RateWindow {
  Rational u_lo;
  Rational u_hi;
  Rational u_sample;
  std::int64_t q = 1;
  double s_lo = 0.0;
  double s_hi = 0.0;
  double s_sample = 0.0;
  Sign sign = Sign::Positive;
};

/// Violation seen by the float oracle (approximate mode).
struct ApproxViolation {
  double s;
  double npv;
};

/// RateWindow for usury, a dominating pure loan for N_- legality.
using Witness = std::variant<std::monostate, RateWindow, CashFlowStream, ApproxViolation>;

struct Decision {
  bool legal;
  Rule rule;
  RateSpec rate;
  Witness witness;
  Mode mode = Mode::Exact;
  bool relative = false;
  /// CapMinus only: date of the first positive discounted balance.
  std::optional<Rational> breach_time;
};

/// N_+(r): F_s(x) <= 0 for every s >= r.
Decision in_cap_plus(const CashFlowStream& x, const RateSpec& rate, const ScanConfig& scan = {});

/// N_-(r): the discounted running balance never becomes positive.
Decision in_cap_minus(const CashFlowStream& x, const RateSpec& rate);

/// F_r(x) <= 0 at the cap rate alone.
Decision in_weak_cap(const CashFlowStream& x, const RateSpec& rate);

/// F_s(x) >= 0 for every s in [0, r]. Requires a nonnegative rate.
Decision in_floor(const CashFlowStream& x, const RateSpec& rate, const ScanConfig& scan = {});

enum class OrientedSide { AsGiven, Negated, Neither };
enum class Fault { None, PartyX, PartyY, Both };

std::string_view to_string(OrientedSide s);
std::string_view to_string(Fault f);

struct JointDecision {
  bool legal;
  OrientedSide oriented_side;
  Fault at_fault;
  Mode mode;
  Decision floor_given;
  Decision cap_given;
  Decision floor_negated;
  Decision cap_negated;
};

/// Legal when x or -x passes both the floor and the cap. Party X receives x.
/// Throws ErrorCode::InvalidConfig when the floor exceeds the cap.
JointDecision joint_classify(const CashFlowStream& x, const RateSpec& floor_rate, const RateSpec& cap_rate,
                             const ScanConfig& scan = {});

/// The pure loan y = x - x_r(T)(1+rho)^{T+1} 1_{T+1} dominating x, with IRR rho.
/// Errors: NotApplicable for the zero stream, NotInCapMinus, NonExactFactor
/// for non-integer times or a float rate.
CashFlowStream pure_dominator_witness(const CashFlowStream& x, const RateSpec& rate);

/// A floating-rate contract with fixed-rate template x is legal under the
/// relative cap exactly when x is legal under the base cap.
Decision relative_classify(const CashFlowStream& x, const BenchmarkPath& b, const RateSpec& cap_rate,
                           const ScanConfig& scan = {});

/// Ex-post audit of an observed floating loan xb: recovers the template and
/// classifies it. Throws ErrorCode::NotAligned when the path does not compound exactly.
Decision audit_floating_loan(const CashFlowStream& xb, const BenchmarkPath& b, const RateSpec& cap_rate,
                             const ScanConfig& scan = {});

}  // namespace ratecap
