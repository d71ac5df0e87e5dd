#include "ratecap/discounting.hpp"

#include "ratecap/error.hpp"

#include <cmath>
#include <sstream>

namespace ratecap {

RateSpec RateSpec::effective(Rational rho) {
  rho.canonicalize();
  if (rho <= -1) throw Error(ErrorCode::InvalidRate, "effective rate must exceed -100%, got " + to_string(rho));
  return RateSpec(Effective{std::move(rho)});
}

RateSpec RateSpec::log_float(double s) {
  if (!std::isfinite(s)) throw Error(ErrorCode::InvalidRate, "logarithmic rate must be finite");
  return RateSpec(LogFloat{s});
}

const Rational& RateSpec::effective_rate() const {
  if (const auto* e = std::get_if<Effective>(&value_)) return e->rho;
  throw Error(ErrorCode::InvalidRate, "logarithmic float rate has no exact effective value");
}

double RateSpec::log_rate() const {
  if (const auto* e = std::get_if<Effective>(&value_)) return std::log1p(e->rho.get_d());
  return std::get<LogFloat>(value_).s;
}

std::string RateSpec::describe() const {
  if (const auto* e = std::get_if<Effective>(&value_)) return "effective " + to_string(e->rho);
  std::ostringstream os;
  os.precision(17);
  os << "log " << std::get<LogFloat>(value_).s;
  return os.str();
}

BenchmarkPath::BenchmarkPath(std::vector<BenchmarkSegment> segments) : segments_(std::move(segments)) {
  if (segments_.empty() || segments_.front().start_time != 0)
    throw Error(ErrorCode::InvalidConfig, "benchmark path must start at time 0");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].per_period_rate <= -1)
      throw Error(ErrorCode::InvalidRate, "benchmark rate must exceed -100%");
    if (i > 0 && segments_[i].start_time <= segments_[i - 1].start_time)
      throw Error(ErrorCode::InvalidConfig, "benchmark segment starts must be strictly increasing");
  }
}

BenchmarkPath BenchmarkPath::constant(const Rational& rate) { return BenchmarkPath({{Rational(0), rate}}); }

double npv_float(const CashFlowStream& x, double s) {
  double sum = 0.0;
  for (const auto& tx : x.transactions()) sum += tx.amount.get_d() * std::exp(-s * tx.time.get_d());
  return sum;
}

std::vector<double> discounted_partials_float(const CashFlowStream& x, double s) {
  std::vector<double> out;
  out.reserve(x.size());
  double sum = 0.0;
  for (const auto& tx : x.transactions()) {
    sum += tx.amount.get_d() * std::exp(-s * tx.time.get_d());
    out.push_back(sum);
  }
  return out;
}

Rational compound_factor(const BenchmarkPath& b, const Rational& t) {
  if (sgn(t) < 0) throw Error(ErrorCode::InvalidTime, "negative time " + to_string(t));
  Rational factor(1);
  const auto segs = b.segments();
  for (std::size_t i = 0; i < segs.size() && segs[i].start_time < t; ++i) {
    const Rational end = (i + 1 < segs.size() && segs[i + 1].start_time < t) ? segs[i + 1].start_time : t;
    Rational periods = end - segs[i].start_time;
    periods.canonicalize();
    if (periods.get_den() != 1 || !periods.get_num().fits_slong_p())
      throw Error(ErrorCode::NotAligned, "time " + to_string(t) + " does not cover whole periods of segment " +
                                             std::to_string(i));
    factor *= pow(1 + segs[i].per_period_rate, periods.get_num().get_si());
  }
  factor.canonicalize();
  return factor;
}

double compound_factor_float(const BenchmarkPath& b, double t) {
  double log_factor = 0.0;
  const auto segs = b.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const double start = segs[i].start_time.get_d();
    if (start >= t) break;
    const double end = (i + 1 < segs.size()) ? std::min(segs[i + 1].start_time.get_d(), t) : t;
    log_factor += (end - start) * std::log1p(segs[i].per_period_rate.get_d());
  }
  return std::exp(log_factor);
}

CashFlowStream float_transform(const CashFlowStream& x, const BenchmarkPath& b) {
  std::vector<Transaction> raw(x.transactions().begin(), x.transactions().end());
  for (auto& tx : raw) tx.amount *= compound_factor(b, tx.time);
  return CashFlowStream::normalize(std::move(raw));
}

CashFlowStream inverse_float_transform(const CashFlowStream& xb, const BenchmarkPath& b) {
  std::vector<Transaction> raw(xb.transactions().begin(), xb.transactions().end());
  for (auto& tx : raw) tx.amount /= compound_factor(b, tx.time);
  return CashFlowStream::normalize(std::move(raw));
}

std::vector<std::pair<double, double>> float_transform_float(const CashFlowStream& x, const BenchmarkPath& b) {
  std::vector<std::pair<double, double>> out;
  out.reserve(x.size());
  for (const auto& tx : x.transactions()) {
    const double t = tx.time.get_d();
    out.emplace_back(t, tx.amount.get_d() * compound_factor_float(b, t));
  }
  return out;
}

CashFlowStream discounted_stream(const CashFlowStream& x, const Rational& rho) {
  if (rho <= -1) throw Error(ErrorCode::InvalidRate, "effective rate must exceed -100%");
  const Rational growth = 1 + rho;
  std::vector<Transaction> raw(x.transactions().begin(), x.transactions().end());
  for (auto& tx : raw) {
    if (tx.time.get_den() != 1 || !tx.time.get_num().fits_slong_p())
      throw Error(ErrorCode::NotAligned, "exact discounting needs integer times, got " + to_string(tx.time));
    tx.amount *= pow(growth, -tx.time.get_num().get_si());
  }
  return CashFlowStream::normalize(std::move(raw));
}

}  // namespace ratecap
