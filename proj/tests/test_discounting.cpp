#include "ratecap/discounting.hpp"
#include "ratecap/error.hpp"

#include <cmath>

#include <gtest/gtest.h>

using namespace ratecap;

TEST(RateSpec, EffectiveAndLogForms) {
  const auto r = RateSpec::effective(Rational(7, 10));
  EXPECT_TRUE(r.is_exact());
  EXPECT_EQ(r.effective_rate(), Rational(7, 10));
  EXPECT_NEAR(r.log_rate(), std::log(1.7), 1e-15);
  const auto f = RateSpec::log_float(0.5);
  EXPECT_FALSE(f.is_exact());
  EXPECT_THROW(f.effective_rate(), Error);
  EXPECT_THROW(RateSpec::effective(Rational(-1)), Error);
}

TEST(Npv, MatchesClosedForm) {
  const auto x = make_stream({{0, -100}, {1, 170}});
  EXPECT_NEAR(npv_float(x, std::log(1.7)), 0.0, 1e-12);
  EXPECT_NEAR(npv_float(x, std::log(1.6)), 6.25, 1e-12);
  EXPECT_DOUBLE_EQ(npv_float(CashFlowStream{}, 1.0), 0.0);
  const auto partials = discounted_partials_float(x, std::log(1.6));
  ASSERT_EQ(partials.size(), 2u);
  EXPECT_DOUBLE_EQ(partials[0], -100.0);
  EXPECT_NEAR(partials[1], 6.25, 1e-12);
}

TEST(Benchmark, PathValidation) {
  EXPECT_THROW(BenchmarkPath({}), Error);
  EXPECT_THROW(BenchmarkPath({{Rational(1), Rational(0)}}), Error);
  EXPECT_THROW(BenchmarkPath({{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}), Error);
  EXPECT_NO_THROW(BenchmarkPath({{Rational(0), Rational(1, 20)}, {Rational(2), Rational(1, 10)}}));
}

TEST(Benchmark, CompoundFactorAcrossSegments) {
  const BenchmarkPath b({{Rational(0), Rational(1, 20)}, {Rational(2), Rational(1, 10)}});
  EXPECT_EQ(compound_factor(b, 0), 1);
  EXPECT_EQ(compound_factor(b, 2), Rational(441, 400));
  EXPECT_EQ(compound_factor(b, 3), Rational(441, 400) * Rational(11, 10));
  EXPECT_THROW(compound_factor(b, Rational(1, 2)), Error);
  EXPECT_NEAR(compound_factor_float(b, 3.0), 1.05 * 1.05 * 1.1, 1e-14);
}

TEST(Benchmark, FloatTransformAndInverse) {
  const auto x = make_stream({{0, -100}, {1, 103}});
  const auto b = BenchmarkPath::constant(Rational(1, 20));
  const auto xb = float_transform(x, b);
  EXPECT_EQ(xb, make_stream({{0, -100}, {1, Rational(10815, 100)}}));
  EXPECT_EQ(inverse_float_transform(xb, b), x);
  const auto approx = float_transform_float(make_stream({{Rational(1, 2), 1}}), b);
  ASSERT_EQ(approx.size(), 1u);
  EXPECT_NEAR(approx[0].second, std::sqrt(1.05), 1e-14);
}

TEST(Discounting, ExactDiscountedStream) {
  const auto x = make_stream({{0, -100}, {1, 170}});
  EXPECT_EQ(discounted_stream(x, Rational(7, 10)), make_stream({{0, -100}, {1, 100}}));
  EXPECT_THROW(discounted_stream(make_stream({{Rational(1, 2), 1}}), Rational(1, 10)), Error);
}
