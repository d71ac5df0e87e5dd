#include "ratecap/polynomial.hpp"

#include "ratecap/error.hpp"

#include <algorithm>

namespace ratecap {

namespace {

const Integer& zero_integer() {
  static const Integer z(0);
  return z;
}

enum class TermFilter { All, Positive, Negative };

// Numerator of p(a/b) * b^d (b > 0), optionally restricted to terms of one sign.
Integer homogeneous_value(std::span<const Integer> c, const Integer& a, const Integer& b, TermFilter filter) {
  const auto keep = [filter](const Integer& v) {
    switch (filter) {
      case TermFilter::All: return true;
      case TermFilter::Positive: return sgn(v) > 0;
      case TermFilter::Negative: return sgn(v) < 0;
    }
    return true;
  };
  if (c.empty()) return Integer(0);
  Integer acc = keep(c.back()) ? c.back() : Integer(0);
  Integer bpow(1);
  for (std::size_t n = c.size() - 1; n-- > 0;) {
    acc *= a;
    bpow *= b;
    if (sgn(c[n]) != 0 && keep(c[n])) acc += c[n] * bpow;
  }
  return acc;
}

Rational filtered_value(std::span<const Integer> c, const Rational& u, TermFilter filter) {
  if (c.empty()) return Rational(0);
  const Integer num = homogeneous_value(c, u.get_num(), u.get_den(), filter);
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), u.get_den_mpz_t(), c.size() - 1);
  Rational v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly IntPoly::from_rational(std::span<const Rational> coeffs) {
  Integer common(1);
  for (const auto& c : coeffs)
    if (sgn(c) != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Rational scaled = c * common;
    scaled.canonicalize();
    out.push_back(scaled.get_num());
  }
  return IntPoly(std::move(out)).primitive();
}

IntPoly IntPoly::linear_root(const Rational& v) {
  Rational c(v);
  c.canonicalize();
  return IntPoly({Integer(-c.get_num()), c.get_den()});
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t n) {
  std::vector<Integer> out(n + 1);
  out[n] = c;
  return IntPoly(std::move(out));
}

const Integer& IntPoly::coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : zero_integer(); }

std::size_t IntPoly::lowest_exponent() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (sgn(coeffs_[n]) != 0) return n;
  throw Error(ErrorCode::ZeroPoly, "zero polynomial has no lowest term");
}

std::size_t IntPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) out[n - 1] = coeffs_[n] * static_cast<unsigned long>(n);
  return IntPoly(std::move(out));
}

Integer IntPoly::content() const {
  Integer g(0);
  for (const auto& c : coeffs_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  const Integer g = content();
  if (sgn(g) == 0 || g == 1) return *this;
  std::vector<Integer> out(coeffs_);
  for (auto& c : out)
    if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shift_down(std::size_t k) const {
  if (k == 0) return *this;
  for (std::size_t n = 0; n < std::min(k, coeffs_.size()); ++n)
    if (sgn(coeffs_[n]) != 0) throw Error(ErrorCode::ZeroPoly, "shift_down would drop a nonzero term");
  if (k >= coeffs_.size()) return IntPoly();
  return IntPoly(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Rational IntPoly::eval(const Rational& u) const { return filtered_value(coeffs_, u, TermFilter::All); }

Sign IntPoly::sign_at(const Rational& u) const {
  if (coeffs_.empty()) return Sign::Zero;
  return sign_of(homogeneous_value(coeffs_, u.get_num(), u.get_den(), TermFilter::All));
}

Sign IntPoly::sign_at_plus_infinity() const { return coeffs_.empty() ? Sign::Zero : sign_of(coeffs_.back()); }

Sign IntPoly::sign_at_minus_infinity() const {
  const Sign s = sign_at_plus_infinity();
  return (degree() % 2 == 0) ? s : -s;
}

std::pair<Rational, Rational> IntPoly::bounds_on(const Rational& lo, const Rational& hi) const {
  // On u >= 0 every positive term is increasing and every negative term decreasing.
  Rational lower = filtered_value(coeffs_, lo, TermFilter::Positive) + filtered_value(coeffs_, hi, TermFilter::Negative);
  Rational upper = filtered_value(coeffs_, hi, TermFilter::Positive) + filtered_value(coeffs_, lo, TermFilter::Negative);
  return {std::move(lower), std::move(upper)};
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeff(n) + b.coeff(n);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> out(a.coeffs_);
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (sgn(b.coeffs_[j]) != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> out(a.coeffs_);
  for (auto& v : out) v *= c;
  return IntPoly(std::move(out));
}

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPoly, "division by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly(), a};

  const auto bc = b.coeffs();
  const Integer& lc = b.leading();
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));

  for (int k = a.degree(); k >= db; --k) {
    const Integer top = r[static_cast<std::size_t>(k)];
    const auto shift = static_cast<std::size_t>(k - db);
    for (auto& v : q)
      if (sgn(v) != 0) v *= lc;
    for (std::size_t n = 0; n < static_cast<std::size_t>(k); ++n)
      if (sgn(r[n]) != 0) r[n] *= lc;
    r[static_cast<std::size_t>(k)] = 0;
    if (sgn(top) != 0) {
      q[shift] += top;
      for (std::size_t j = 0; j + 1 < bc.size(); ++j)
        if (sgn(bc[j]) != 0) r[shift + j] -= top * bc[j];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = pseudo_divide(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::NotApplicable, "exact_quotient: divisor does not divide dividend");
  // The multiplier lc(b)^(deg a - deg b + 1) may be negative.
  const int e = a.degree() - b.degree() + 1;
  if (sgn(b.leading()) < 0 && e % 2 != 0) q = -q;
  return q.primitive();
}

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  IntPoly a = a_in.primitive();
  IntPoly b = b_in.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_divide(a, b).remainder.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && sgn(a.leading()) < 0) a = -a;
  return a;
}

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "Sturm chain of the zero polynomial");
  chain_.push_back(p.primitive());
  IntPoly d = p.derivative().primitive();
  if (d.is_zero()) return;
  chain_.push_back(std::move(d));
  while (true) {
    const IntPoly& prev = chain_[chain_.size() - 2];
    const IntPoly& cur = chain_.back();
    IntPoly r = pseudo_divide(prev, cur).remainder;
    if (r.is_zero()) break;
    // prem = m * rem with m = lc(cur)^(delta+1); the classical member is -rem.
    const int e = prev.degree() - cur.degree() + 1;
    const bool multiplier_negative = sgn(cur.leading()) < 0 && e % 2 != 0;
    if (!multiplier_negative) r = -r;
    chain_.push_back(r.primitive());
  }
}

namespace {

int count_variations(const std::vector<Sign>& signs) {
  int v = 0;
  Sign last = Sign::Zero;
  for (Sign s : signs) {
    if (s == Sign::Zero) continue;
    if (last != Sign::Zero && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const Rational& u) const {
  std::vector<Sign> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sgn(u) == 0 ? sign_of(p.coeff(0)) : p.sign_at(u));
  return count_variations(signs);
}

int SturmChain::variations_at_plus_infinity() const {
  std::vector<Sign> signs;
  for (const auto& p : chain_) signs.push_back(p.sign_at_plus_infinity());
  return count_variations(signs);
}

int SturmChain::variations_at_minus_infinity() const {
  std::vector<Sign> signs;
  for (const auto& p : chain_) signs.push_back(p.sign_at_minus_infinity());
  return count_variations(signs);
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw Error(ErrorCode::NotApplicable, "Sturm count needs a < b");
  if (chain_.front().sign_at(a) == Sign::Zero || chain_.front().sign_at(b) == Sign::Zero)
    throw Error(ErrorCode::EndpointRoot, "interval endpoint is a root");
  return variations_at(a) - variations_at(b);
}

}  // namespace ratecap
