#include "ratecap/cashflow.hpp"
#include "ratecap/error.hpp"

#include <gtest/gtest.h>

using namespace ratecap;

TEST(CashFlow, NormalizeSortsMergesAndDropsZeros) {
  const auto x = CashFlowStream::normalize({{Rational(1), Rational(5)},
                                            {Rational(0), Rational(-3)},
                                            {Rational(1), Rational(-5)},
                                            {Rational(2), Rational(0)},
                                            {Rational(1, 2), Rational(4)}});
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x.transactions()[0], (Transaction{Rational(0), Rational(-3)}));
  EXPECT_EQ(x.transactions()[1], (Transaction{Rational(1, 2), Rational(4)}));
}

TEST(CashFlow, NegativeTimeRejected) {
  try {
    CashFlowStream::normalize({{Rational(-1), Rational(1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTime);
  }
}

TEST(CashFlow, Accessors) {
  const auto x = make_stream({{0, -100}, {1, 170}});
  EXPECT_EQ(x.maturity(), 1);
  EXPECT_EQ(x.total(), 70);
  EXPECT_EQ(x.earliest_sign(), Sign::Negative);
  EXPECT_EQ(x.cumulative_at(Rational(1, 2)), -100);
  EXPECT_EQ(x.cumulative_at(1), 70);
  EXPECT_THROW(x.cumulative_at(-1), Error);
  EXPECT_TRUE(CashFlowStream{}.is_zero());
  EXPECT_EQ(CashFlowStream{}.earliest_sign(), Sign::Zero);
}

TEST(CashFlow, VectorSpaceOperations) {
  const auto x = make_stream({{0, -100}, {1, 170}});
  const auto y = make_stream({{1, -170}, {2, 10}});
  EXPECT_EQ(combine(x, y), make_stream({{0, -100}, {2, 10}}));
  EXPECT_TRUE(combine(x, negate(x)).is_zero());
  EXPECT_EQ(scale(x, Rational(1, 2)), make_stream({{0, -50}, {1, 85}}));
  EXPECT_THROW(scale(x, Rational(0)), Error);
  EXPECT_THROW(scale(x, Rational(-1)), Error);
}

TEST(CashFlow, DominanceIsCumulativeOrder) {
  const auto plain = make_stream({{0, -100}, {1, 170}});
  const auto refund = make_stream({{0, -100}, {1, 170}, {Rational(366, 365), -1}});
  EXPECT_TRUE(dominates(refund, plain));
  EXPECT_FALSE(dominates(plain, refund));
  EXPECT_TRUE(dominates(plain, plain));
  // Paying earlier is better for the lender.
  EXPECT_TRUE(dominates(make_stream({{2, 10}}), make_stream({{1, 10}})));
  EXPECT_FALSE(dominates(make_stream({{1, 10}}), make_stream({{2, 10}})));
}
