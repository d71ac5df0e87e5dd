#include "support/properties.hpp"

#include <gtest/gtest.h>

using namespace ratecap;
using namespace ratecap::testing;

namespace {

void report(const Tally& t) {
  EXPECT_GT(t.checked, 0);
  EXPECT_EQ(t.violations, 0);
  for (const auto& f : t.failures) ADD_FAILURE() << f;
}

constexpr int kCases = 120;

}  // namespace

TEST(Property, Sandwich) {
  Rng rng(101);
  Tally t;
  for (int i = 0; i < kCases; ++i) sandwich(t, random_mixed(rng), random_rate(rng));
  report(t);
}

TEST(Property, Monotonicity) {
  Rng rng(102);
  Tally t;
  for (int i = 0; i < kCases; ++i) monotone(t, random_mixed(rng), random_rate(rng), random_rate(rng));
  report(t);
}

TEST(Property, ConeClosure) {
  Rng rng(103);
  Tally t;
  for (int i = 0; i < kCases; ++i)
    cone(t, random_mixed(rng), random_mixed(rng), random_rate(rng), random_positive_scale(rng));
  report(t);
}

TEST(Property, Dominance) {
  Rng rng(104);
  Tally t;
  for (int i = 0; i < kCases; ++i) {
    const CashFlowStream y = random_mixed(rng);
    dominance(t, worsen(rng, y), y, random_rate(rng));
  }
  report(t);
}

TEST(Property, Stability) {
  Rng rng(105);
  Tally t;
  for (int i = 0; i < kCases; ++i) stability(t, random_mixed(rng), random_rate(rng));
  report(t);
}

TEST(Property, ConsistencyWithIrr) {
  Rng rng(106);
  Tally t;
  for (int i = 0; i < kCases; ++i) consistency(t, random_mixed(rng), random_rate(rng));
  report(t);
}

TEST(Property, Internality) {
  Rng rng(107);
  Tally t;
  for (int i = 0; i < 4 * kCases; ++i) internality(t, random_loan(rng), random_loan(rng));
  report(t);
}

TEST(Property, OracleAgreement) {
  Rng rng(108);
  Tally t;
  for (int i = 0; i < kCases; ++i) oracle_agreement(t, random_mixed(rng), random_rate(rng));
  report(t);
}

TEST(Property, ClassNesting) {
  Rng rng(109);
  for (int i = 0; i < kCases; ++i) {
    const CashFlowStream x = random_mixed(rng);
    const StreamAnalysis a = analyze(x);
    if (!has_finite_irr(a.stream_class)) continue;
    // Every finite class has a single sign switch from - to + in u.
    EXPECT_EQ(a.profile.gaps.front(), Sign::Negative) << show(x);
    EXPECT_EQ(a.profile.gaps.back(), Sign::Positive) << show(x);
    if (a.stream_class != StreamClass::S3) EXPECT_EQ(a.profile.roots.size(), 1u) << show(x);
    if (a.stream_class == StreamClass::S0 || a.stream_class == StreamClass::S1) EXPECT_NO_THROW(pure_rate(x));
  }
}

TEST(Property, JointAntisymmetry) {
  Rng rng(110);
  for (int i = 0; i < kCases; ++i) {
    const CashFlowStream x = random_mixed(rng);
    const Rational floor = random_rate(rng, 0, 20);
    const Rational cap = floor + random_rate(rng, 0, 100);
    const JointDecision j = joint_classify(x, eff(floor), eff(cap));
    const JointDecision n = joint_classify(negate(x), eff(floor), eff(cap));
    EXPECT_EQ(j.legal, n.legal) << show(x);
    if (j.legal) {
      EXPECT_NE(j.oriented_side, n.oriented_side) << show(x);
      EXPECT_FALSE(j.floor_given.legal && j.cap_given.legal && j.floor_negated.legal && j.cap_negated.legal)
          << show(x);
    } else if (j.at_fault == Fault::PartyX) {
      EXPECT_EQ(n.at_fault, Fault::PartyY) << show(x);
    } else if (j.at_fault == Fault::PartyY) {
      EXPECT_EQ(n.at_fault, Fault::PartyX) << show(x);
    }
  }
}

TEST(Property, WitnessSoundness) {
  Rng rng(111);
  for (int i = 0; i < kCases; ++i) {
    const CashFlowStream x = random_mixed(rng);
    const Rational rho = random_rate(rng);
    const Decision plus = in_cap_plus(x, eff(rho));
    if (const auto* w = std::get_if<RateWindow>(&plus.witness)) {
      EXPECT_EQ(sign_at_rational(encode(x, w->q), w->u_sample), Sign::Positive) << show(x);
      EXPECT_NE(compare(AlgebraicCutoff::make(rho, w->q).point, w->u_hi), std::strong_ordering::less) << show(x);
    }
    const Decision minus = in_cap_minus(x, eff(rho));
    if (const auto* y = std::get_if<CashFlowStream>(&minus.witness)) {
      EXPECT_TRUE(dominates(x, *y)) << show(x);
      EXPECT_EQ(compare_irr_to_rate(pure_rate(*y), rho), std::strong_ordering::equal) << show(x);
    }
  }
}

TEST(Property, PlantedRepeatedFactors) {
  Rng rng(112);
  for (int i = 0; i < 200; ++i) {
    const IntPoly a = random_poly(rng, 4, 20), b = random_poly(rng, 3, 20), c = random_poly(rng, 2, 20);
    const IntPoly p = a * b * b * c * c * c;
    IntPoly product(std::vector<Integer>{Integer(1)});
    for (const auto& f : squarefree_decompose(p))
      for (int k = 0; k < f.multiplicity; ++k) product = product * f.factor;
    EXPECT_TRUE(product.primitive() == p.primitive() || product.primitive() == (-p).primitive());

    // Sign scanning sees exactly the odd-multiplicity positive roots; rounding
    // noise next to an even root is ignored.
    const Rational m = cauchy_root_bound(p);
    int odd = 0;
    std::vector<double> even_s;
    for (const auto& r : isolate_roots(p, Rational(0), m).roots) {
      if (r.parity == Parity::Odd) {
        ++odd;
        continue;
      }
      AlgebraicNumber v = r.value;
      v.refine_to(Rational(1, 1000000000));
      even_s.push_back(-std::log(v.approx()));
    }
    std::vector<Integer> rev(p.coeffs().rbegin(), p.coeffs().rend());
    const double span = std::log(std::max(m, cauchy_root_bound(IntPoly(std::move(rev)))).get_d()) + 0.01;
    std::vector<Transaction> raw;
    for (std::size_t n = 0; n < p.coeffs().size(); ++n)
      if (p.coeffs()[n] != 0) raw.push_back({Rational(static_cast<long>(n)), Rational(p.coeffs()[n])});
    int seen = 0;
    for (const auto& br : bracket_roots(CashFlowStream::normalize(std::move(raw)), {-span, span, 20000, 1e-12})) {
      const bool noise = std::any_of(even_s.begin(), even_s.end(), [&](double e) { return std::fabs(br.mid() - e) < 1e-3; });
      seen += !noise;
    }
    EXPECT_EQ(seen, odd) << i;
  }
}

TEST(Property, OracleBracketsMatchIsolatedRoots) {
  Rng rng(113);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    const CashFlowStream x = random_mixed(rng);
    const StreamAnalysis a = analyze(x);
    if (x.is_zero() || a.profile.roots.empty()) continue;
    std::vector<double> exact;
    bool simple = true;
    for (const auto& r : a.profile.roots) {
      simple = simple && r.multiplicity == 1;
      AlgebraicNumber v = r.value;
      v.refine_to(Rational(1, Integer("1000000000000000")));
      exact.push_back(-std::log(v.approx()));
    }
    std::sort(exact.begin(), exact.end());
    if (!simple || exact.front() < -5.0 || exact.back() > 5.0) continue;
    bool separated = true;
    for (std::size_t k = 1; k < exact.size(); ++k) separated = separated && exact[k] - exact[k - 1] > 1e-2;
    if (!separated) continue;
    const auto brackets = bracket_roots(x, {-6.0, 6.0, 10000, 1e-12});
    ASSERT_EQ(brackets.size(), exact.size()) << show(x);
    for (std::size_t k = 0; k < exact.size(); ++k) EXPECT_NEAR(brackets[k].mid(), exact[k], 1e-6) << show(x);
    ++compared;
  }
  EXPECT_GT(compared, 50);
}
