// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "support/generators.hpp"
#include "support/properties.hpp"

#include "ratecap/caps.hpp"
#include "ratecap/discounting.hpp"
#include "ratecap/expoly.hpp"
#include "ratecap/irr.hpp"
#include "ratecap/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace ratecap;
using namespace ratecap::testing;

namespace {

// Pinned tolerances and budgets.
constexpr double kCanadaRateTol = 1e-10;
constexpr double kCanadaBudgetMs = 1.0;
constexpr double kFeeBudgetMs = 1000.0;
constexpr double kClosedFormTol = 1e-9;
constexpr double kPublishedRootTol = 5e-3;
constexpr double kLineOfCreditBudgetMs = 100.0;
constexpr double kPropertyBudgetS = 60.0;
constexpr double kSturmBudgetS = 30.0;
constexpr int kPropertyStreams = 1000;
constexpr int kCapsPerStream = 5;
constexpr int kSturmPolys = 1000;
constexpr int kFloatStreams = 100;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Criterion {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void emit(int id, const std::string& title, Criterion& c) {
  std::printf("%s criterion %d: %s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), c.notes.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

RateSpec pct(long p) { return RateSpec::effective(Rational(p, 100)); }

double refined_log_rate(AlgebraicNumber u, std::int64_t q) {
  u.refine_to(Rational(1, Integer("1000000000000")));
  return -static_cast<double>(q) * std::log(u.approx());
}

void canada_loan() {
  Criterion c;
  const auto loan = make_stream({{0, -100}, {1, 170}});
  const auto t0 = Clock::now();
  const auto v = irr(loan);
  const bool illegal60 = !in_cap_plus(loan, pct(60)).legal;
  const bool legal70 = in_cap_plus(loan, pct(70)).legal;
  const double elapsed = ms_since(t0);
  c.require(v && v->kind == IrrValue::Kind::Finite, "finite irr");
  if (v && v->root) {
    c.require(std::fabs(v->effective_rate - 0.70) <= kCanadaRateTol, "effective rate 0.70");
    c.require(v->root->lower() <= Rational(10, 17) && Rational(10, 17) <= v->root->upper(), "bracket holds 10/17");
  }
  c.require(illegal60, "illegal at 60%");
  c.require(legal70, "legal at 70%");
  c.require(elapsed < kCanadaBudgetMs, "runtime");
  c.notes << " (" << elapsed << " ms)";
  emit(1, "Canada loan irr 70%, illegal at 60%, legal at 70%", c);
}

void application_fee() {
  Criterion c;
  const auto fee = make_stream({{0, 1}, {Rational(1, 365), -100}, {Rational(366, 365), 170}});
  const auto t0 = Clock::now();
  const StreamClass cls = classify_stream(fee);
  const RateBound rp = refinement_plus(fee);
  bool all_illegal = true;
  for (long p : {10, 60, 1000}) all_illegal = all_illegal && !in_cap_plus(fee, pct(p)).legal;
  const double elapsed = ms_since(t0);
  c.require(cls != StreamClass::S2 && cls != StreamClass::S1 && cls != StreamClass::S0, "no conventional IRR");
  c.require(rp.kind == RateBound::Kind::Infinite, "refinement_plus = +inf");
  c.require(all_illegal, "illegal at 10%, 60%, 1000%");
  c.require(elapsed < kFeeBudgetMs, "runtime");
  c.notes << " (class " << to_string(cls) << ", " << elapsed << " ms)";
  emit(2, "application fee loan illegal under every cap", c);
}

void refund_loan() {
  Criterion c;
  const auto plain = make_stream({{0, -100}, {1, 170}});
  const auto refund = make_stream({{0, -100}, {1, 170}, {Rational(366, 365), -1}});
  const StreamAnalysis a = analyze(refund);
  const bool no_irr = a.stream_class == StreamClass::Outside ||
                      (a.stream_class != StreamClass::S0 && a.stream_class != StreamClass::S1 &&
                       a.stream_class != StreamClass::S2);
  c.require(no_irr, "no conventional IRR");
  const Decision d = in_cap_plus(refund, pct(60));
  c.require(!d.legal, "illegal at 60%");
  const auto* w = std::get_if<RateWindow>(&d.witness);
  c.require(w != nullptr, "violating bracket present");
  if (w) {
    c.require(w->u_lo <= w->u_sample && w->u_sample <= w->u_hi, "sample inside bracket");
    c.require(sign_at_rational(encode(refund, w->q), w->u_sample) == Sign::Positive, "exact sign positive at sample");
    c.notes << " (s in [" << w->s_lo << ", " << w->s_hi << "])";
  }
  c.require(dominates(refund, plain), "refund loan dominated by plain loan");
  c.notes << " (class " << to_string(a.stream_class) << ")";
  emit(3, "refund loan illegal at 60% with certified bracket", c);
}

void line_of_credit() {
  Criterion c;
  const auto x = make_stream({{0, -1}, {1, 5}});
  const auto y = make_stream({{6, -1000}, {7, 1500}});
  const auto t0 = Clock::now();
  const auto ix = irr(x), iy = irr(y);
  const auto xy = combine(x, y);
  const StreamAnalysis a = analyze(xy);
  std::vector<double> roots;
  for (const auto& r : a.profile.roots) roots.push_back(refined_log_rate(r.value, a.poly.q));
  std::sort(roots.begin(), roots.end());
  const RateBound rp = refinement_plus(a);
  const RateSpec cap = RateSpec::effective(from_double(std::expm1(1.61)));
  const bool legal = in_cap_plus(x, cap).legal && in_cap_plus(y, cap).legal && in_cap_plus(xy, cap).legal;
  const double elapsed = ms_since(t0);

  c.require(ix && std::fabs(ix->log_rate - std::log(5.0)) <= kClosedFormTol, "irr(x) = ln 5");
  c.require(iy && std::fabs(iy->log_rate - std::log(1.5)) <= kClosedFormTol, "irr(y) = ln 1.5");
  c.require(roots.size() == 3, "three root brackets");
  if (roots.size() == 3) {
    const double published[3] = {0.44, 1.11, 1.55};
    for (int i = 0; i < 3; ++i) c.require(std::fabs(roots[i] - published[i]) <= kPublishedRootTol, "root near published value");
    c.notes << " (roots " << roots[0] << ", " << roots[1] << ", " << roots[2] << ")";
  }
  c.require(rp.kind == RateBound::Kind::Finite && std::fabs(rp.log_rate - 1.55) <= kPublishedRootTol, "refinement_plus");
  c.require(legal, "x, y, x+y legal at cap e^1.61 - 1");
  c.require(elapsed < kLineOfCreditBudgetMs, "runtime");
  c.notes << " (" << elapsed << " ms)";
  emit(4, "line of credit irr, three roots, refinement 1.55", c);
}

void joint() {
  Criterion c;
  const auto x = make_stream({{0, 1}, {1, -2}, {2, 1}});
  const JointDecision j = joint_classify(x, pct(3), pct(60));
  const JointDecision n = joint_classify(negate(x), pct(3), pct(60));
  c.require(!j.legal && j.at_fault == Fault::PartyX, "x usurious, party X at fault");
  c.require(!n.legal && n.at_fault == Fault::PartyY, "negated input faults party Y");
  c.require(classify_stream(x) == StreamClass::S4Pos, "class S4Pos");
  const auto v = irr(x);
  c.require(v && v->kind == IrrValue::Kind::PlusInfinity, "irr = +inf");
  emit(5, "joint floor 3% and cap 60% fault assignment", c);
}

void property_suite() {
  Criterion c;
  Rng rng(kSeed);
  Tally sw, mono, cn, dom, stab, cons, inter, orc;
  const auto t0 = Clock::now();
  CashFlowStream prev = random_mixed(rng);
  for (int i = 0; i < kPropertyStreams; ++i) {
    const CashFlowStream x = random_mixed(rng);
    std::vector<Rational> caps;
    for (int k = 0; k < kCapsPerStream; ++k) caps.push_back(random_rate(rng));
    for (const auto& r : caps) sandwich(sw, x, r);
    monotone(mono, x, caps[0], caps[1]);
    cone(cn, x, prev, caps[2], random_positive_scale(rng));
    dominance(dom, worsen(rng, x), x, caps[3]);
    stability(stab, x, caps[4]);
    consistency(cons, x, caps[0]);
    internality(inter, random_loan(rng), random_loan(rng));
    oracle_agreement(orc, x, caps[1]);
    prev = x;
  }
  const double elapsed = ms_since(t0) / 1000.0;
  const std::pair<const char*, const Tally*> all[] = {{"sandwich", &sw},     {"monotonicity", &mono},
                                                      {"cone", &cn},         {"dominance", &dom},
                                                      {"stability", &stab},  {"condition (i)", &cons},
                                                      {"INT/S-INT", &inter}, {"oracle", &orc}};
  for (const auto& [name, t] : all) {
    c.require(t->violations == 0, std::string(name) + (t->failures.empty() ? "" : ": " + t->failures.front()));
    c.notes << " " << name << " " << t->checked - t->violations << "/" << t->checked << ";";
  }
  c.require(elapsed < kPropertyBudgetS, "runtime");
  c.notes << " (" << elapsed << " s)";
  emit(6, "property suite on 1000 random streams", c);
}

void sturm_kernel() {
  Criterion c;
  Rng rng(kSeed + 7);
  int count_mismatch = 0, reconstruction_mismatch = 0, multiple = 0;
  std::string first_mismatch;
  const auto t0 = Clock::now();
  for (int i = 0; i < kSturmPolys; ++i) {
    const IntPoly p = random_poly(rng);
    const auto factors = squarefree_decompose(p);
    IntPoly product(std::vector<Integer>{Integer(1)});
    bool squarefree = true;
    for (const auto& f : factors) {
      for (int k = 0; k < f.multiplicity; ++k) product = product * f.factor;
      if (f.multiplicity > 1 && f.factor.degree() > 0) squarefree = false;
    }
    if (product.primitive() != p.primitive() && product.primitive() != (-p).primitive()) ++reconstruction_mismatch;

    const Rational m = cauchy_root_bound(p);
    const IntPoly sq = squarefree_part(p);
    const int sturm = sturm_count(sq, Rational(0), m);
    int expected = sturm;
    if (!squarefree) {
      ++multiple;
      expected = 0;
      for (const auto& r : isolate_roots(p, Rational(0), m).roots) expected += r.parity == Parity::Odd;
    }

    // p(u) with u = e^{-s} is the stream sum c_n e^{-s n}.
    std::vector<Transaction> raw;
    for (std::size_t n = 0; n < p.coeffs().size(); ++n)
      if (p.coeffs()[n] != 0) raw.push_back({Rational(static_cast<long>(n)), Rational(p.coeffs()[n])});
    const CashFlowStream as_stream = CashFlowStream::normalize(std::move(raw));
    // Positive roots lie in (1/m_rev, m), m_rev bounding the reversed polynomial.
    std::vector<Integer> rev(p.coeffs().rbegin(), p.coeffs().rend());
    const Rational m_rev = cauchy_root_bound(IntPoly(std::move(rev)));
    const double span = std::log(std::max(m, m_rev).get_d()) + 0.01;
    const auto brackets = bracket_roots(as_stream, {-span, span, 10000, 1e-12});
    if (static_cast<int>(brackets.size()) != expected) {
      if (count_mismatch == 0) {
        std::ostringstream s;
        s << "poly #" << i << " degree " << p.degree() << ": sturm " << expected << " vs oracle " << brackets.size();
        first_mismatch = s.str();
      }
      ++count_mismatch;
    }
  }
  const double elapsed = ms_since(t0) / 1000.0;
  c.require(count_mismatch == 0, "sturm vs oracle count: " + std::to_string(count_mismatch) + " mismatches, " + first_mismatch);
  c.require(reconstruction_mismatch == 0, "squarefree reconstruction");
  c.require(elapsed < kSturmBudgetS, "runtime");
  c.notes << " (" << kSturmPolys << " polys, " << multiple << " with repeated factors, " << elapsed << " s)";
  emit(7, "Sturm counts match oracle; squarefree reconstruction exact", c);
}

void floating_rate_identity() {
  Criterion c;
  Rng rng(kSeed + 11);
  int mismatches = 0, checked = 0;
  for (const Rational& rate : {Rational(1, 20), Rational(1, 10)}) {
    const BenchmarkPath b = BenchmarkPath::constant(rate);
    for (int i = 0; i < kFloatStreams; ++i) {
      const CashFlowStream x = random_stream(rng);
      const CashFlowStream xb = float_transform(x, b);
      std::vector<Transaction> direct;
      for (const auto& tx : x.transactions()) {
        Rational factor(1);
        for (long k = 0; k < tx.time.get_num().get_si(); ++k) factor *= 1 + rate;
        direct.push_back({tx.time, tx.amount * factor});
      }
      ++checked;
      if (xb != CashFlowStream::normalize(std::move(direct))) ++mismatches;
    }
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.notes << " (" << checked << " streams)";
  emit(8, "constant benchmark float transform equals direct compounding", c);
}

}  // namespace

int main() {
  canada_loan();
  application_fee();
  refund_loan();
  line_of_credit();
  joint();
  property_suite();
  sturm_kernel();
  floating_rate_identity();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
