#pragma once

#include "ratecap/cashflow.hpp"
#include "ratecap/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace ratecap::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_amount(Rng& rng, long max_num = 10000, long max_den = 20) {
  long num = 0;
  while (num == 0) num = uniform(rng, -max_num, max_num);
  Rational a(num, uniform(rng, 1, max_den));
  a.canonicalize();
  return a;
}

/// Up to max_tx transactions at distinct integer times in [0, max_time].
inline CashFlowStream random_stream(Rng& rng, int max_tx = 8, int max_time = 12) {
  std::vector<long> times(max_time + 1);
  std::iota(times.begin(), times.end(), 0);
  std::shuffle(times.begin(), times.end(), rng);
  const int n = static_cast<int>(uniform(rng, 1, max_tx));
  std::vector<Transaction> raw;
  for (int i = 0; i < n; ++i) raw.push_back({Rational(times[i]), random_amount(rng)});
  return CashFlowStream::normalize(std::move(raw));
}

/// A loan shaped stream: advances first, then repayments, scaled so that the
/// rate of return is moderate. Lands in S0..S3 most of the time.
inline CashFlowStream random_loan(Rng& rng, int max_tx = 8, int max_time = 12) {
  const int n = static_cast<int>(uniform(rng, 2, max_tx));
  std::vector<long> times(max_time + 1);
  std::iota(times.begin(), times.end(), 0);
  std::shuffle(times.begin(), times.end(), rng);
  times.resize(n);
  std::sort(times.begin(), times.end());
  const int advances = static_cast<int>(uniform(rng, 1, n - 1));
  std::vector<Transaction> raw;
  for (int i = 0; i < n; ++i) {
    Rational a(uniform(rng, 1, 10000), uniform(rng, 1, 20));
    a.canonicalize();
    if (i < advances) a = -a;
    raw.push_back({Rational(times[i]), a});
  }
  return CashFlowStream::normalize(std::move(raw));
}

/// Mixture used by the property suite: half arbitrary, half loan shaped.
inline CashFlowStream random_mixed(Rng& rng) {
  return uniform(rng, 0, 1) == 0 ? random_stream(rng) : random_loan(rng);
}

/// Effective rate k/100 for k in [lo_pct, hi_pct].
inline Rational random_rate(Rng& rng, long lo_pct = 0, long hi_pct = 150) {
  Rational r(uniform(rng, lo_pct, hi_pct), 100);
  r.canonicalize();
  return r;
}

inline Rational random_positive_scale(Rng& rng) {
  Rational l(uniform(rng, 1, 1000), uniform(rng, 1, 100));
  l.canonicalize();
  return l;
}

/// Degree <= max_degree with integer coefficients in [-bound, bound] and a
/// nonzero leading and constant term.
inline IntPoly random_poly(Rng& rng, int max_degree = 40, long bound = 10000) {
  const int d = static_cast<int>(uniform(rng, 1, max_degree));
  std::vector<Integer> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = uniform(rng, -bound, bound);
  while (c[d] == 0) c[d] = uniform(rng, -bound, bound);
  while (c[0] == 0) c[0] = uniform(rng, -bound, bound);
  return IntPoly(std::move(c));
}

}  // namespace ratecap::testing
