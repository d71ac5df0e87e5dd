#include "ratecap/expoly.hpp"

#include "ratecap/error.hpp"

#include <algorithm>
#include <numeric>

namespace ratecap {

namespace {

// Dense exponents beyond this are refused: a century of daily cash flows stays well below it.
constexpr std::int64_t kMaxDegree = 2'000'000;

IntPoly strip_root(IntPoly p, const Rational& v) {
  const IntPoly lin = IntPoly::linear_root(v);
  while (p.degree() >= 1 && p.sign_at(v) == Sign::Zero) p = exact_quotient(p, lin);
  return p;
}

}  // namespace

Rational ExpPoly::eval(const Rational& u) const {
  Rational sum(0);
  for (const auto& [n, c] : coeffs) sum += c * pow(u, n);
  return sum;
}

IntPoly ExpPoly::to_int_poly() const {
  if (coeffs.empty()) return IntPoly();
  std::vector<Rational> dense(static_cast<std::size_t>(degree() + 1));
  for (const auto& [n, c] : coeffs) dense[static_cast<std::size_t>(n)] = c;
  return IntPoly::from_rational(dense);
}

std::int64_t natural_denominator(const CashFlowStream& x) {
  Integer q(1);
  for (const auto& tx : x.transactions()) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), tx.time.get_den_mpz_t());
  if (!q.fits_slong_p()) throw Error(ErrorCode::InvalidTime, "time denominators too large");
  return q.get_si();
}

ExpPoly encode(const CashFlowStream& x) { return encode(x, natural_denominator(x)); }

ExpPoly encode(const CashFlowStream& x, std::int64_t q) {
  if (q <= 0) throw Error(ErrorCode::InvalidTime, "time denominator must be positive");
  ExpPoly p;
  p.q = q;
  for (const auto& tx : x.transactions()) {
    Rational n = tx.time * q;
    n.canonicalize();
    if (n.get_den() != 1) throw Error(ErrorCode::InvalidTime, "time " + to_string(tx.time) + " is not a multiple of 1/" + std::to_string(q));
    if (n.get_num() > kMaxDegree) throw Error(ErrorCode::InvalidTime, "exponent too large for time " + to_string(tx.time));
    p.coeffs.emplace(n.get_num().get_si(), tx.amount);
  }
  return p;
}

std::vector<IntPoly> partial_sum_polys(const CashFlowStream& x, std::int64_t q) {
  std::vector<IntPoly> out;
  out.reserve(x.size());
  std::vector<Rational> dense;
  for (const auto& tx : x.transactions()) {
    Rational n = tx.time * q;
    n.canonicalize();
    if (n.get_den() != 1) throw Error(ErrorCode::InvalidTime, "time " + to_string(tx.time) + " is not a multiple of 1/" + std::to_string(q));
    const auto e = static_cast<std::size_t>(n.get_num().get_si());
    if (dense.size() <= e) dense.resize(e + 1);
    dense[e] += tx.amount;
    out.push_back(IntPoly::from_rational(dense));
  }
  return out;
}

std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  IntPoly c = gcd(p, p.derivative());
  IntPoly w = exact_quotient(p, c);
  int i = 1;
  while (w.degree() > 0) {
    IntPoly y = gcd(w, c);
    IntPoly z = exact_quotient(w, y);
    if (z.degree() > 0) out.push_back({std::move(z), i});
    ++i;
    c = exact_quotient(c, y);
    w = std::move(y);
  }
  return out;
}

std::vector<SquarefreeFactor> squarefree_decompose(const ExpPoly& p) { return squarefree_decompose(p.to_int_poly()); }

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "squarefree part of the zero polynomial");
  if (p.degree() == 0) return p.primitive();
  return exact_quotient(p, gcd(p, p.derivative()));
}

int sturm_count(const IntPoly& p, const Rational& a, const Rational& b) { return SturmChain(p).count(a, b); }

RootReport isolate_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "root isolation of the zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::NotApplicable, "isolate_roots needs lo < hi");
  RootReport report{{}, hi};

  std::vector<SquarefreeFactor> factors = squarefree_decompose(p);
  if (factors.empty()) return report;
  for (auto& f : factors) f.factor = strip_root(strip_root(std::move(f.factor), lo), hi);
  std::erase_if(factors, [](const SquarefreeFactor& f) { return f.factor.degree() < 1; });
  if (factors.empty()) return report;

  IntPoly work = factors.front().factor;
  for (std::size_t i = 1; i < factors.size(); ++i) work = work * factors[i].factor;
  work = work.primitive();
  const SturmChain chain(work);

  struct Pending {
    Rational a, b;
  };
  std::vector<std::pair<Rational, Rational>> brackets;
  std::vector<Rational> exact_roots;
  std::vector<Pending> stack{{lo, hi}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    const int n = chain.count(cur.a, cur.b);
    if (n == 0) continue;
    if (n == 1) {
      brackets.emplace_back(std::move(cur.a), std::move(cur.b));
      continue;
    }
    Rational mid = (cur.a + cur.b) / 2;
    mid.canonicalize();
    if (work.sign_at(mid) != Sign::Zero) {
      stack.push_back({cur.a, mid});
      stack.push_back({mid, cur.b});
      continue;
    }
    // The midpoint is itself a root: give it a private bracket.
    Rational delta = (cur.b - cur.a) / 4;
    while (true) {
      const Rational l = mid - delta, h = mid + delta;
      if (work.sign_at(l) != Sign::Zero && work.sign_at(h) != Sign::Zero && chain.count(l, h) == 1) {
        brackets.emplace_back(l, h);
        exact_roots.push_back(mid);
        stack.push_back({cur.a, l});
        stack.push_back({h, cur.b});
        break;
      }
      delta /= 2;
    }
  }
  std::sort(brackets.begin(), brackets.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<SturmChain> factor_chains;
  if (factors.size() > 1)
    for (const auto& f : factors) factor_chains.emplace_back(f.factor);

  for (auto& [a, b] : brackets) {
    std::size_t owner = 0;
    if (factors.size() > 1) {
      owner = factors.size();
      for (std::size_t i = 0; i < factors.size(); ++i)
        if (factor_chains[i].count(a, b) == 1) {
          owner = i;
          break;
        }
      if (owner == factors.size()) throw Error(ErrorCode::NotApplicable, "root not owned by any squarefree factor");
    }
    const auto& f = factors[owner];
    const auto exact = std::find_if(exact_roots.begin(), exact_roots.end(),
                                    [&](const Rational& r) { return a < r && r < b; });
    AlgebraicNumber value = exact != exact_roots.end() ? AlgebraicNumber::rational(*exact) : AlgebraicNumber(f.factor, a, b);
    report.roots.push_back(
        {a, b, std::move(value), f.multiplicity, f.multiplicity % 2 == 1 ? Parity::Odd : Parity::Even});
  }
  return report;
}

Rational cauchy_root_bound(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "root bound of the zero polynomial");
  if (p.degree() == 0) return Rational(1);
  Rational worst(0);
  const Integer lead = abs(p.leading());
  for (int n = 0; n < p.degree(); ++n) {
    Rational ratio(abs(p.coeff(static_cast<std::size_t>(n))), lead);
    ratio.canonicalize();
    if (ratio > worst) worst = ratio;
  }
  return power_of_two_ceil(1 + worst);
}

Sign sign_at_rational(const IntPoly& p, const Rational& u) { return p.sign_at(u); }

Sign sign_at_rational(const ExpPoly& p, const Rational& u) { return sign_of(p.eval(u)); }

AlgebraicCutoff AlgebraicCutoff::make(const Rational& rho_in, std::int64_t q) {
  Rational rho(rho_in);
  rho.canonicalize();
  if (rho <= -1) throw Error(ErrorCode::InvalidRate, "effective rate must exceed -100%");
  if (q <= 0) throw Error(ErrorCode::InvalidTime, "time denominator must be positive");
  Rational growth = 1 + rho;
  growth.canonicalize();
  // growth = a/b; defining polynomial a u^q - b.
  std::vector<Integer> coeffs(static_cast<std::size_t>(q) + 1);
  coeffs.front() = -growth.get_den();
  coeffs.back() = growth.get_num();
  IntPoly defining(std::move(coeffs));

  Rational inverse = 1 / growth;
  inverse.canonicalize();
  if (auto root = exact_root(inverse, static_cast<std::uint64_t>(q)))
    return {rho, q, defining, AlgebraicNumber::rational(*root)};

  Rational lo(0), hi(1);
  if (growth < 1) {
    lo = 1;
    hi = 2;
    while (defining.sign_at(hi) != Sign::Positive) hi *= 2;
  }
  return {rho, q, defining, AlgebraicNumber(defining, lo, hi)};
}

Sign sign_at_cutoff(const IntPoly& p, const AlgebraicCutoff& c) { return sign_at(p, c.point); }

Sign sign_at_cutoff(const ExpPoly& p, const AlgebraicCutoff& c) {
  if (p.q != c.q) throw Error(ErrorCode::NotApplicable, "polynomial and cutoff use different time denominators");
  return sign_at(p.to_int_poly(), c.point);
}

std::strong_ordering compare_root_to_cutoff(const AlgebraicNumber& root, const AlgebraicCutoff& c) {
  return compare(root, c.point);
}

std::strong_ordering compare_root_to_cutoff(const Rational& lo, const Rational& hi, const IntPoly& p,
                                            const AlgebraicCutoff& c) {
  return compare(AlgebraicNumber(p, lo, hi), c.point);
}

SignProfile sign_profile(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "sign profile of the zero polynomial");
  const IntPoly shifted = p.shift_down(p.lowest_exponent());
  SignProfile profile;
  profile.gaps.push_back(sign_of(shifted.coeff(0)));
  if (shifted.degree() == 0) return profile;
  RootReport report = isolate_roots(shifted, Rational(0), cauchy_root_bound(shifted));
  profile.roots = std::move(report.roots);
  for (std::size_t i = 0; i < profile.roots.size(); ++i) {
    const Rational& after = profile.roots[i].hi;
    profile.gaps.push_back(i + 1 < profile.roots.size() ? shifted.sign_at(after) : shifted.sign_at_plus_infinity());
  }
  return profile;
}

}  // namespace ratecap
