#pragma once

#include "ratecap/cashflow.hpp"

#include <cstddef>
#include <vector>

namespace ratecap {

/// Brute-force view of s -> F_s(x) in floating point. Shares nothing with the
/// exact root isolation; a found violation is real, an absent one proves nothing.
struct ScanConfig {
  double s_lo = 0.0;
  double s_hi = 10.0;
  std::size_t grid_points = 10000;
  double bisection_tolerance = 1e-12;

  /// Throws ErrorCode::InvalidConfig unless s_lo < s_hi and grid_points >= 2.
  void validate() const;
};

struct SignChange {
  double s_lo;
  double s_hi;
  /// +1 when F goes from negative to positive as s increases, -1 otherwise.
  int direction;
};

struct RootBracket {
  double lo;
  double hi;
  double mid() const { return 0.5 * (lo + hi); }
};

/// Sign of F_s(x), computed as sum x_k e^{-s (t_k - t_0)} so that large s
/// does not underflow.
int oracle_sign(const CashFlowStream& x, double s);

std::vector<SignChange> scan_signs(const CashFlowStream& x, const ScanConfig& cfg);
std::vector<RootBracket> bracket_roots(const CashFlowStream& x, const ScanConfig& cfg);

struct OracleVerdict {
  bool violation_found = false;
  double s = 0.0;
  double npv = 0.0;
};

/// Looks for s >= r with F_s(x) > 0 on a grid over [r, max(cfg.s_hi, r + 10)],
/// then in the tail when the earliest payment is positive.
OracleVerdict oracle_in_cap_plus(const CashFlowStream& x, double r, const ScanConfig& cfg = {});

/// Looks for s in [0, r] with F_s(x) < 0.
OracleVerdict oracle_in_floor(const CashFlowStream& x, double r, const ScanConfig& cfg = {});

/// Checks the discounted running balance at the single rate r; the reported
/// npv is the first positive balance.
OracleVerdict oracle_in_cap_minus(const CashFlowStream& x, double r);

OracleVerdict oracle_in_weak_cap(const CashFlowStream& x, double r);

}  // namespace ratecap
