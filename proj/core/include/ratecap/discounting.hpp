#pragma once

#include "ratecap/cashflow.hpp"
#include "ratecap/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ratecap {

/// A discount rate. Regulations quote effective per-period rates, which keep
/// every decision exact; a logarithmic float rate only supports approximate
/// decisions.
class RateSpec {
 public:
  struct Effective {
    Rational rho;
  };
  struct LogFloat {
    double s;
  };

  /// rho > -1.
  static RateSpec effective(Rational rho);
  static RateSpec log_float(double s);

  bool is_exact() const { return std::holds_alternative<Effective>(value_); }
  /// Requires is_exact().
  const Rational& effective_rate() const;
  /// Continuously compounded rate ln(1 + rho) or s.
  double log_rate() const;
  std::string describe() const;

 private:
  explicit RateSpec(std::variant<Effective, LogFloat> v) : value_(std::move(v)) {}
  std::variant<Effective, LogFloat> value_;
};

/// Piecewise-constant benchmark path: segment i starts at start_time and
/// compounds at per_period_rate per unit time until the next segment.
struct BenchmarkSegment {
  Rational start_time;
  Rational per_period_rate;
};

class BenchmarkPath {
 public:
  /// Start times strictly increasing beginning at 0; each rate > -1.
  explicit BenchmarkPath(std::vector<BenchmarkSegment> segments);
  static BenchmarkPath constant(const Rational& rate);

  std::span<const BenchmarkSegment> segments() const { return segments_; }

 private:
  std::vector<BenchmarkSegment> segments_;
};

/// F_s(x) = sum x_k e^{-s t_k}, summed in ascending time order.
double npv_float(const CashFlowStream& x, double s);

/// Running discounted balance after each transaction; the last entry is npv_float.
std::vector<double> discounted_partials_float(const CashFlowStream& x, double s);

/// exp(integral of b over [0,t]) as an exact rational. Throws
/// ErrorCode::NotAligned unless every piece of [0,t] covers a whole number of periods.
Rational compound_factor(const BenchmarkPath& b, const Rational& t);

/// Same factor in floating point for any t (reporting only).
double compound_factor_float(const BenchmarkPath& b, double t);

/// The floating-rate loan x^(b): each amount multiplied by compound_factor(b, t).
CashFlowStream float_transform(const CashFlowStream& x, const BenchmarkPath& b);

/// Inverse of float_transform: recovers the fixed-rate template of an observed floating loan.
CashFlowStream inverse_float_transform(const CashFlowStream& xb, const BenchmarkPath& b);

/// float_transform without the alignment requirement; (time, amount) pairs in double.
std::vector<std::pair<double, double>> float_transform_float(const CashFlowStream& x, const BenchmarkPath& b);

/// The exactly discounted stream x_r for r = ln(1 + rho): amounts x_k (1+rho)^{-t_k}.
/// Requires integer times (ErrorCode::NotAligned otherwise).
CashFlowStream discounted_stream(const CashFlowStream& x, const Rational& rho);

}  // namespace ratecap
