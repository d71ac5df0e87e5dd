#include "ratecap/algebraic.hpp"

#include "ratecap/error.hpp"

#include <algorithm>

namespace ratecap {

namespace {

// Bisection steps tried before paying for a gcd with the defining polynomial.
constexpr int kRefinementsBeforeGcd = 48;

}  // namespace

AlgebraicNumber AlgebraicNumber::rational(const Rational& v) {
  AlgebraicNumber a;
  Rational c(v);
  c.canonicalize();
  a.defining_ = IntPoly::linear_root(c);
  a.exact_ = c;
  return a;
}

AlgebraicNumber::AlgebraicNumber(IntPoly defining, Rational lo, Rational hi)
    : defining_(defining.primitive()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (defining_.degree() < 1) throw Error(ErrorCode::ZeroPoly, "algebraic number needs a nonconstant definition");
  if (!(lo_ < hi_)) throw Error(ErrorCode::NotApplicable, "empty bracket");
  if (defining_.degree() == 1) {
    Rational root(Integer(-defining_.coeff(0)), defining_.coeff(1));
    root.canonicalize();
    if (!(lo_ < root && root < hi_)) throw Error(ErrorCode::NotApplicable, "bracket does not contain the root");
    exact_ = root;
    return;
  }
  sign_lo_ = defining_.sign_at(lo_);
  const Sign sign_hi = defining_.sign_at(hi_);
  if (sign_lo_ == Sign::Zero || sign_hi == Sign::Zero) throw Error(ErrorCode::EndpointRoot, "bracket endpoint is a root");
  if (sign_lo_ == sign_hi) throw Error(ErrorCode::NotApplicable, "defining polynomial does not change sign on bracket");
}

void AlgebraicNumber::refine() {
  if (exact_) return;
  Rational mid = (lo_ + hi_) / 2;
  mid.canonicalize();
  const Sign s = defining_.sign_at(mid);
  if (s == Sign::Zero) {
    exact_ = mid;
  } else if (s == sign_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

void AlgebraicNumber::refine_to(const Rational& width) {
  while (!exact_ && hi_ - lo_ > width) refine();
}

void AlgebraicNumber::refine_relative(const Rational& rel) {
  while (!exact_ && hi_ - lo_ > rel * lo_) refine();
}

double AlgebraicNumber::approx() const {
  if (exact_) return exact_->get_d();
  Rational mid = (lo_ + hi_) / 2;
  return mid.get_d();
}

SignCertificate certify_sign(const IntPoly& p, AlgebraicNumber point) {
  if (p.is_zero()) return {Sign::Zero, std::move(point)};
  if (sgn(point.lower()) < 0) throw Error(ErrorCode::NotApplicable, "certify_sign expects a nonnegative point");
  bool zero_excluded = false;
  for (int i = 0;; ++i) {
    if (point.is_rational()) {
      const Sign s = p.sign_at(*point.exact());
      return {s, std::move(point)};
    }
    const auto [low, high] = p.bounds_on(point.lower(), point.upper());
    if (sgn(low) > 0) return {Sign::Positive, std::move(point)};
    if (sgn(high) < 0) return {Sign::Negative, std::move(point)};
    if (!zero_excluded && i >= kRefinementsBeforeGcd) {
      const IntPoly g = gcd(p, point.defining());
      if (g.degree() >= 1 && SturmChain(g).count(point.lower(), point.upper()) > 0)
        return {Sign::Zero, std::move(point)};
      zero_excluded = true;
    }
    point.refine();
  }
}

std::strong_ordering compare(AlgebraicNumber a, AlgebraicNumber b) {
  if (a.is_rational() && b.is_rational()) return compare(*a.exact(), *b.exact());
  bool equality_excluded = false;
  for (int i = 0;; ++i) {
    if (a.upper() <= b.lower() && !(a.is_rational() && b.is_rational())) return std::strong_ordering::less;
    if (b.upper() <= a.lower() && !(a.is_rational() && b.is_rational())) return std::strong_ordering::greater;
    if (a.is_rational() && b.is_rational()) return compare(*a.exact(), *b.exact());
    // Brackets overlap.
    if (a.is_rational()) {
      if (b.defining().sign_at(*a.exact()) == Sign::Zero) return std::strong_ordering::equal;
      b.refine();
      continue;
    }
    if (b.is_rational()) {
      if (a.defining().sign_at(*b.exact()) == Sign::Zero) return std::strong_ordering::equal;
      a.refine();
      continue;
    }
    if (!equality_excluded && i >= kRefinementsBeforeGcd) {
      const IntPoly g = gcd(a.defining(), b.defining());
      if (g.degree() >= 1) {
        const Rational lo = std::max<Rational>(a.lower(), b.lower());
        const Rational hi = std::min<Rational>(a.upper(), b.upper());
        if (SturmChain(g).count(lo, hi) > 0) return std::strong_ordering::equal;
      }
      equality_excluded = true;
    }
    if (a.width() >= b.width())
      a.refine();
    else
      b.refine();
  }
}

std::strong_ordering compare(AlgebraicNumber a, const Rational& b) { return compare(std::move(a), AlgebraicNumber::rational(b)); }

RationalWindow window_between(AlgebraicNumber a, AlgebraicNumber b) {
  if (compare(a, b) != std::strong_ordering::less) throw Error(ErrorCode::NotApplicable, "window_between needs a < b");
  while (!(a.upper() < b.lower())) {
    a.refine();
    b.refine();
  }
  const Rational& lo_edge = a.upper();
  const Rational& hi_edge = b.lower();
  Rational mid = (lo_edge + hi_edge) / 2;
  mid.canonicalize();
  RationalWindow w{a.is_rational() ? mid : lo_edge, b.is_rational() ? mid : hi_edge, Rational()};
  w.sample = (w.lo + w.hi) / 2;
  w.sample.canonicalize();
  return w;
}

}  // namespace ratecap
