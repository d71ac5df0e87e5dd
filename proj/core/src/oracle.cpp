#include "ratecap/oracle.hpp"

#include "ratecap/discounting.hpp"
#include "ratecap/error.hpp"

#include <cmath>

namespace ratecap {

namespace {

// The stream in doubles, times shifted so the earliest is zero.
struct Flows {
  std::vector<double> dt;
  std::vector<double> amount;

  explicit Flows(const CashFlowStream& x) {
    const auto txs = x.transactions();
    for (const auto& tx : txs) {
      dt.push_back(Rational(tx.time - txs.front().time).get_d());
      amount.push_back(tx.amount.get_d());
    }
  }

  // F_s(x) e^{s t_0}: same sign as F_s(x), no underflow for large s.
  double scaled_npv(double s) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < dt.size(); ++k) sum += amount[k] * std::exp(-s * dt[k]);
    return sum;
  }

  int sign(double s) const {
    const double v = scaled_npv(s);
    return (v > 0.0) - (v < 0.0);
  }
};

std::vector<double> grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

}  // namespace

void ScanConfig::validate() const {
  if (!(s_lo < s_hi)) throw Error(ErrorCode::InvalidConfig, "scan range needs s_lo < s_hi");
  if (grid_points < 2) throw Error(ErrorCode::InvalidConfig, "scan needs at least two grid points");
  if (!(bisection_tolerance > 0.0)) throw Error(ErrorCode::InvalidConfig, "bisection tolerance must be positive");
}

int oracle_sign(const CashFlowStream& x, double s) { return Flows(x).sign(s); }

std::vector<SignChange> scan_signs(const CashFlowStream& x, const ScanConfig& cfg) {
  cfg.validate();
  std::vector<SignChange> out;
  if (x.is_zero()) return out;
  const Flows f(x);
  const auto g = grid(cfg.s_lo, cfg.s_hi, cfg.grid_points);
  double last_s = 0.0;
  int last_sign = 0;
  for (double s : g) {
    const int sg = f.sign(s);
    if (sg == 0) continue;
    if (last_sign != 0 && sg != last_sign) out.push_back({last_s, s, sg});
    last_s = s;
    last_sign = sg;
  }
  return out;
}

std::vector<RootBracket> bracket_roots(const CashFlowStream& x, const ScanConfig& cfg) {
  std::vector<RootBracket> out;
  const Flows f(x);
  for (const auto& change : scan_signs(x, cfg)) {
    double lo = change.s_lo;
    double hi = change.s_hi;
    const int lo_sign = f.sign(lo);
    while (hi - lo > cfg.bisection_tolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const int sg = f.sign(mid);
      if (sg == 0) {
        lo = hi = mid;
        break;
      }
      (sg == lo_sign ? lo : hi) = mid;
    }
    out.push_back({lo, hi});
  }
  return out;
}

OracleVerdict oracle_in_cap_plus(const CashFlowStream& x, double r, const ScanConfig& cfg) {
  if (x.is_zero()) return {};
  const double hi = cfg.s_hi > r ? cfg.s_hi : r + 10.0;
  ScanConfig local = cfg;
  local.s_lo = r;
  local.s_hi = hi;
  local.validate();
  const Flows f(x);
  for (double s : grid(r, hi, local.grid_points)) {
    if (f.sign(s) > 0) return {true, s, npv_float(x, s)};
  }
  if (x.transactions().front().amount > 0) {
    for (double s = 2.0 * hi; s < 1e9; s *= 2.0)
      if (f.sign(s) > 0) return {true, s, npv_float(x, s)};
  }
  return {};
}

OracleVerdict oracle_in_floor(const CashFlowStream& x, double r, const ScanConfig& cfg) {
  if (x.is_zero()) return {};
  const Flows f(x);
  if (r <= 0.0) {
    const int sg = f.sign(0.0);
    if (sg < 0) return {true, 0.0, npv_float(x, 0.0)};
    return {};
  }
  for (double s : grid(0.0, r, cfg.grid_points < 2 ? 2 : cfg.grid_points)) {
    if (f.sign(s) < 0) return {true, s, npv_float(x, s)};
  }
  return {};
}

OracleVerdict oracle_in_cap_minus(const CashFlowStream& x, double r) {
  for (double balance : discounted_partials_float(x, r))
    if (balance > 0.0) return {true, r, balance};
  return {};
}

OracleVerdict oracle_in_weak_cap(const CashFlowStream& x, double r) {
  if (Flows(x).sign(r) > 0) return {true, r, npv_float(x, r)};
  return {};
}

}  // namespace ratecap
