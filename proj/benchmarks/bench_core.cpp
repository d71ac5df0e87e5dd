#include "ratecap/caps.hpp"
#include "ratecap/expoly.hpp"
#include "ratecap/irr.hpp"

#include <benchmark/benchmark.h>

using namespace ratecap;

namespace {

const CashFlowStream& application_fee() {
  static const CashFlowStream x = make_stream({{0, 1}, {Rational(1, 365), -100}, {Rational(366, 365), 170}});
  return x;
}

const CashFlowStream& refund_loan() {
  static const CashFlowStream x = make_stream({{0, -100}, {1, 170}, {Rational(366, 365), -1}});
  return x;
}

void BM_SturmChainDegree366(benchmark::State& state) {
  const IntPoly p = encode(refund_loan()).to_int_poly();
  for (auto _ : state) {
    SturmChain chain(p);
    benchmark::DoNotOptimize(chain.count(Rational(0), Rational(2)));
  }
}
BENCHMARK(BM_SturmChainDegree366)->Unit(benchmark::kMillisecond);

void BM_ClassifyApplicationFee(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_stream(application_fee()));
}
BENCHMARK(BM_ClassifyApplicationFee)->Unit(benchmark::kMillisecond);

void BM_CapPlusRefundLoan(benchmark::State& state) {
  const RateSpec cap = RateSpec::effective(Rational(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(in_cap_plus(refund_loan(), cap).legal);
}
BENCHMARK(BM_CapPlusRefundLoan)->Unit(benchmark::kMillisecond);

void BM_CapMinusCanadaLoan(benchmark::State& state) {
  const CashFlowStream x = make_stream({{0, -100}, {1, 170}});
  const RateSpec cap = RateSpec::effective(Rational(7, 10));
  for (auto _ : state) benchmark::DoNotOptimize(in_cap_minus(x, cap).legal);
}
BENCHMARK(BM_CapMinusCanadaLoan)->Unit(benchmark::kMicrosecond);

void BM_RefinementMinusLineOfCredit(benchmark::State& state) {
  const CashFlowStream x = make_stream({{0, -1}, {1, 5}, {6, -1000}, {7, 1500}});
  for (auto _ : state) benchmark::DoNotOptimize(refinement_minus(x).log_rate);
}
BENCHMARK(BM_RefinementMinusLineOfCredit)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
