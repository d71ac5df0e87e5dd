#include "commands.hpp"

#include "ratecap/caps.hpp"
#include "ratecap/discounting.hpp"
#include "ratecap/error.hpp"
#include "ratecap/expoly.hpp"
#include "ratecap/irr.hpp"
#include "ratecap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ratecap::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Rates {
  std::optional<Rational> cap;
  std::optional<Rational> floor;
};

Rates resolve_rates(const Options& opts) {
  JurisdictionConfig cfg;
  if (opts.config) cfg = parse_config_file(*opts.config);
  Rates r{cfg.cap_effective, cfg.floor_effective};
  if (opts.cap) r.cap = parse_percent(*opts.cap);
  if (opts.floor) r.floor = parse_percent(*opts.floor);
  if (r.cap && *r.cap <= -1) throw Error(ErrorCode::InvalidConfig, "cap must exceed -100%");
  if (r.floor && sgn(*r.floor) < 0) throw Error(ErrorCode::InvalidConfig, "floor must be nonnegative");
  if (r.cap && r.floor && *r.floor > *r.cap) throw Error(ErrorCode::InvalidConfig, "floor exceeds cap");
  return r;
}

const Rational& require_cap(const Rates& r) {
  if (!r.cap) throw Error(ErrorCode::InvalidConfig, "a cap is required (--cap or cap_effective in --config)");
  return *r.cap;
}

RateSpec to_spec(const Rational& rho, const Options& opts) {
  if (opts.float_mode) return RateSpec::log_float(std::log1p(rho.get_d()));
  return RateSpec::effective(rho);
}

ScanConfig scan_config(const Options& opts, std::optional<double> cap_log_rate) {
  ScanConfig cfg;
  cfg.grid_points = opts.grid;
  cfg.s_hi = opts.s_max ? *opts.s_max : std::max(10.0, cap_log_rate ? 2.0 * *cap_log_rate : 0.0);
  cfg.validate();
  return cfg;
}

ordered_json json_double(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

ordered_json rate_json(const RateSpec& rate) {
  ordered_json j;
  if (rate.is_exact()) j["effective"] = to_string(rate.effective_rate());
  j["log_rate"] = json_double(rate.log_rate());
  return j;
}

ordered_json transactions_json(const CashFlowStream& x) {
  ordered_json arr = ordered_json::array();
  for (const auto& tx : x.transactions()) arr.push_back({{"t", to_string(tx.time)}, {"amount", to_string(tx.amount)}});
  return arr;
}

ordered_json witness_json(const Witness& w, const CashFlowStream& x) {
  if (const auto* win = std::get_if<RateWindow>(&w)) {
    ordered_json j;
    j["type"] = win->sign == Sign::Positive ? "violating_rate_bracket" : "floor_breach_bracket";
    j["u"] = {to_string(win->u_lo), to_string(win->u_hi)};
    j["u_sample"] = to_string(win->u_sample);
    j["s"] = {json_double(win->s_lo), json_double(win->s_hi)};
    j["s_sample"] = json_double(win->s_sample);
    j["sign"] = to_string(sign_at_rational(encode(x, win->q), win->u_sample));
    j["npv_at_sample"] = json_double(npv_float(x, win->s_sample));
    return j;
  }
  if (const auto* y = std::get_if<CashFlowStream>(&w))
    return {{"type", "dominating_pure_loan"}, {"transactions", transactions_json(*y)}};
  if (const auto* v = std::get_if<ApproxViolation>(&w))
    return {{"type", "approximate_violation"}, {"s", json_double(v->s)}, {"npv", json_double(v->npv)}};
  return nullptr;
}

ordered_json decision_json(const Decision& d, const CashFlowStream& x) {
  ordered_json j;
  j["legal"] = d.legal;
  j["rule"] = to_string(d.rule);
  j["mode"] = to_string(d.mode);
  j["rate"] = rate_json(d.rate);
  if (d.relative) j["relative"] = true;
  if (d.breach_time) j["breach_time"] = to_string(*d.breach_time);
  j["witness"] = witness_json(d.witness, x);
  return j;
}

ordered_json irr_json(const std::optional<IrrValue>& v) {
  if (!v) return {{"kind", "undefined"}};
  switch (v->kind) {
    case IrrValue::Kind::PlusInfinity: return {{"kind", "plus_infinity"}};
    case IrrValue::Kind::MinusInfinity: return {{"kind", "minus_infinity"}};
    case IrrValue::Kind::Finite: break;
  }
  ordered_json j;
  j["kind"] = "finite";
  j["u_bracket"] = {to_string(v->root->lower()), to_string(v->root->upper())};
  j["q"] = v->q;
  j["log_rate"] = json_double(v->log_rate);
  j["effective_rate"] = json_double(v->effective_rate);
  return j;
}

ordered_json bound_json(const RateBound& b) {
  switch (b.kind) {
    case RateBound::Kind::Zero: return {{"kind", "zero"}, {"log_rate", 0.0}};
    case RateBound::Kind::Infinite: return {{"kind", "plus_infinity"}};
    case RateBound::Kind::Finite: break;
  }
  ordered_json j;
  j["kind"] = "finite";
  j["effective_bracket"] = {to_string(b.effective_lo), to_string(b.effective_hi)};
  j["log_rate"] = json_double(b.log_rate);
  return j;
}

int exit_code_for(const Decision& cap_plus) {
  if (!cap_plus.legal) return kUsurious;
  return cap_plus.mode == Mode::Approximate ? kIndeterminate : kLegal;
}

ordered_json header(const std::string& command, const LoanDocument& loan) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["loan"] = serialize_loan(loan);
  return j;
}

void add_stream_summary(ordered_json& j, const StreamAnalysis& a) {
  j["stream_class"] = to_string(a.stream_class);
  j["irr"] = irr_json(irr(a));
  j["refinement_minus"] = bound_json(refinement_minus(a.stream));
  j["refinement_plus"] = bound_json(refinement_plus(a));
}

}  // namespace

Outcome run_classify(const LoanDocument& loan, const Options& opts) {
  const Rates rates = resolve_rates(opts);
  const RateSpec cap = to_spec(require_cap(rates), opts);
  const ScanConfig scan = scan_config(opts, cap.log_rate());
  const CashFlowStream& x = loan.stream;

  const Decision plus = in_cap_plus(x, cap, scan);
  Outcome out;
  out.report = header("classify", loan);
  out.report["mode"] = to_string(plus.mode);
  add_stream_summary(out.report, analyze(x));
  out.report["cap_plus"] = decision_json(plus, x);
  out.report["cap_minus"] = decision_json(in_cap_minus(x, cap), x);
  out.report["weak_cap"] = decision_json(in_weak_cap(x, cap), x);
  out.report["witness"] = witness_json(plus.witness, x);
  out.exit_code = exit_code_for(plus);
  return out;
}

Outcome run_irr(const LoanDocument& loan, const Options& opts) {
  const Rates rates = resolve_rates(opts);
  Outcome out;
  out.report = header("irr", loan);
  add_stream_summary(out.report, analyze(loan.stream));
  if (rates.cap) {
    const RateSpec cap = to_spec(*rates.cap, opts);
    const Decision plus = in_cap_plus(loan.stream, cap, scan_config(opts, cap.log_rate()));
    out.report["mode"] = to_string(plus.mode);
    out.report["cap_plus"] = decision_json(plus, loan.stream);
    out.exit_code = exit_code_for(plus);
  }
  return out;
}

Outcome run_joint(const LoanDocument& loan, const Options& opts) {
  const Rates rates = resolve_rates(opts);
  const RateSpec cap = to_spec(require_cap(rates), opts);
  if (!rates.floor) throw Error(ErrorCode::InvalidConfig, "a floor is required (--floor or floor_effective in --config)");
  const RateSpec floor = to_spec(*rates.floor, opts);
  const CashFlowStream& x = loan.stream;
  const CashFlowStream neg = negate(x);

  const JointDecision jd = joint_classify(x, floor, cap, scan_config(opts, cap.log_rate()));
  Outcome out;
  out.report = header("joint", loan);
  out.report["mode"] = to_string(jd.mode);
  out.report["stream_class"] = to_string(classify_stream(x));
  ordered_json j;
  j["legal"] = jd.legal;
  j["oriented_side"] = to_string(jd.oriented_side);
  j["at_fault"] = to_string(jd.at_fault);
  j["floor_as_given"] = decision_json(jd.floor_given, x);
  j["cap_as_given"] = decision_json(jd.cap_given, x);
  j["floor_negated"] = decision_json(jd.floor_negated, neg);
  j["cap_negated"] = decision_json(jd.cap_negated, neg);
  out.report["joint"] = std::move(j);
  if (jd.legal)
    out.exit_code = jd.mode == Mode::Approximate ? kIndeterminate : kLegal;
  else
    out.exit_code = kUsurious;
  return out;
}

Outcome run_oracle(const LoanDocument& loan, const Options& opts) {
  const Rates rates = resolve_rates(opts);
  std::optional<double> cap_log;
  if (rates.cap) cap_log = std::log1p(rates.cap->get_d());
  const ScanConfig scan = scan_config(opts, cap_log);
  const CashFlowStream& x = loan.stream;

  Outcome out;
  out.report = header("oracle-check", loan);
  out.report["mode"] = "approximate";
  out.report["scan"] = {{"s_lo", scan.s_lo},
                        {"s_hi", scan.s_hi},
                        {"grid_points", scan.grid_points},
                        {"bisection_tolerance", scan.bisection_tolerance}};
  ordered_json changes = ordered_json::array();
  for (const auto& c : scan_signs(x, scan)) changes.push_back({{"s", {c.s_lo, c.s_hi}}, {"direction", c.direction}});
  out.report["sign_changes"] = std::move(changes);
  ordered_json brackets = ordered_json::array();
  for (const auto& b : bracket_roots(x, scan)) brackets.push_back({{"s", {b.lo, b.hi}}, {"mid", b.mid()}});
  out.report["root_brackets"] = std::move(brackets);

  if (cap_log) {
    const OracleVerdict v = oracle_in_cap_plus(x, *cap_log, scan);
    ordered_json o;
    o["violation_found"] = v.violation_found;
    if (v.violation_found) o["witness"] = {{"type", "approximate_violation"}, {"s", v.s}, {"npv", json_double(v.npv)}};
    out.report["oracle_cap_plus"] = std::move(o);
    if (!opts.float_mode) {
      const Decision exact = in_cap_plus(x, RateSpec::effective(*rates.cap));
      out.report["cap_plus"] = decision_json(exact, x);
      out.report["agree"] = exact.legal == !v.violation_found;
    }
    out.exit_code = v.violation_found ? kUsurious : kIndeterminate;
  }
  return out;
}

Outcome run(const Options& opts) {
  const LoanDocument loan = parse_loan_file(opts.loan);
  if (opts.command == "classify") return run_classify(loan, opts);
  if (opts.command == "irr") return run_irr(loan, opts);
  if (opts.command == "joint") return run_joint(loan, opts);
  if (opts.command == "oracle-check") return run_oracle(loan, opts);
  throw Error(ErrorCode::InvalidConfig, "unknown command '" + opts.command + "'");
}

std::string render_text(const ordered_json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (key == "loan" || key == "schema") continue;
    if (value.is_object() && value.contains("legal")) {
      out << key << ": " << (value["legal"].get<bool>() ? "legal" : "ILLEGAL");
      if (value.contains("at_fault") && !value["legal"].get<bool>()) out << " (at fault: " << value["at_fault"].get<std::string>() << ")";
      if (value.contains("witness") && !value["witness"].is_null()) out << "  witness " << value["witness"].dump();
      out << '\n';
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace ratecap::cli
