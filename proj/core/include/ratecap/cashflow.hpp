#pragma once

#include "ratecap/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ratecap {

/// One dated payment from the lender's point of view: negative amounts are
/// advances to the borrower, positive amounts are repayments.
struct Transaction {
  Rational time;
  Rational amount;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// A finite discrete cash flow stream.
///
/// Always normalized: times strictly increasing, amounts nonzero. The empty
/// stream is the zero stream.
class CashFlowStream {
 public:
  CashFlowStream() = default;

  /// Sorts by time, merges equal times and drops zero amounts.
  /// Throws ErrorCode::InvalidTime on a negative time.
  static CashFlowStream normalize(std::vector<Transaction> raw);

  std::span<const Transaction> transactions() const { return transactions_; }
  std::size_t size() const { return transactions_.size(); }
  bool is_zero() const { return transactions_.empty(); }

  Rational maturity() const;
  Rational total() const;
  /// Sign of the earliest amount; Zero for the zero stream.
  Sign earliest_sign() const;

  /// Cumulative balance x(t): sum of the amounts dated at or before t.
  Rational cumulative_at(const Rational& t) const;

  friend bool operator==(const CashFlowStream&, const CashFlowStream&) = default;

 private:
  std::vector<Transaction> transactions_;
};

CashFlowStream combine(const CashFlowStream& x, const CashFlowStream& y);
CashFlowStream scale(const CashFlowStream& x, const Rational& lambda);
CashFlowStream negate(const CashFlowStream& x);

/// x <= y in the cumulative order: x(t) <= y(t) for every t.
bool dominates(const CashFlowStream& x, const CashFlowStream& y);

inline Rational cumulative_at(const CashFlowStream& x, const Rational& t) { return x.cumulative_at(t); }
inline Rational maturity(const CashFlowStream& x) { return x.maturity(); }
inline Rational total(const CashFlowStream& x) { return x.total(); }
inline Sign earliest_sign(const CashFlowStream& x) { return x.earliest_sign(); }

/// Shorthand for tests and fixtures: {{t, a}, ...} with rational strings or integers.
CashFlowStream make_stream(std::initializer_list<std::pair<Rational, Rational>> items);

}  // namespace ratecap
