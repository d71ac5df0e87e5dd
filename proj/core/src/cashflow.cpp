#include "ratecap/cashflow.hpp"

#include "ratecap/error.hpp"

#include <algorithm>

namespace ratecap {

CashFlowStream CashFlowStream::normalize(std::vector<Transaction> raw) {
  for (const auto& tx : raw)
    if (sgn(tx.time) < 0) throw Error(ErrorCode::InvalidTime, "negative time " + to_string(tx.time));

  std::stable_sort(raw.begin(), raw.end(),
                   [](const Transaction& a, const Transaction& b) { return a.time < b.time; });

  CashFlowStream out;
  for (auto& tx : raw) {
    if (!out.transactions_.empty() && out.transactions_.back().time == tx.time) {
      out.transactions_.back().amount += tx.amount;
    } else {
      out.transactions_.push_back(std::move(tx));
    }
  }
  std::erase_if(out.transactions_, [](const Transaction& tx) { return sgn(tx.amount) == 0; });
  for (auto& tx : out.transactions_) {
    tx.time.canonicalize();
    tx.amount.canonicalize();
  }
  return out;
}

Rational CashFlowStream::maturity() const {
  return transactions_.empty() ? Rational(0) : transactions_.back().time;
}

Rational CashFlowStream::total() const {
  Rational sum(0);
  for (const auto& tx : transactions_) sum += tx.amount;
  return sum;
}

Sign CashFlowStream::earliest_sign() const {
  return transactions_.empty() ? Sign::Zero : sign_of(transactions_.front().amount);
}

Rational CashFlowStream::cumulative_at(const Rational& t) const {
  if (sgn(t) < 0) throw Error(ErrorCode::InvalidTime, "negative time " + to_string(t));
  Rational sum(0);
  for (const auto& tx : transactions_) {
    if (tx.time > t) break;
    sum += tx.amount;
  }
  return sum;
}

CashFlowStream combine(const CashFlowStream& x, const CashFlowStream& y) {
  std::vector<Transaction> raw(x.transactions().begin(), x.transactions().end());
  raw.insert(raw.end(), y.transactions().begin(), y.transactions().end());
  return CashFlowStream::normalize(std::move(raw));
}

CashFlowStream scale(const CashFlowStream& x, const Rational& lambda) {
  if (sgn(lambda) <= 0) throw Error(ErrorCode::InvalidScale, "scale factor must be positive, got " + to_string(lambda));
  std::vector<Transaction> raw(x.transactions().begin(), x.transactions().end());
  for (auto& tx : raw) tx.amount *= lambda;
  return CashFlowStream::normalize(std::move(raw));
}

CashFlowStream negate(const CashFlowStream& x) {
  std::vector<Transaction> raw(x.transactions().begin(), x.transactions().end());
  for (auto& tx : raw) tx.amount = -tx.amount;
  return CashFlowStream::normalize(std::move(raw));
}

bool dominates(const CashFlowStream& x, const CashFlowStream& y) {
  // The cumulative of x - y is a step function; checking its value after each
  // breakpoint covers every t.
  const CashFlowStream diff = combine(x, negate(y));
  Rational running(0);
  for (const auto& tx : diff.transactions()) {
    running += tx.amount;
    if (sgn(running) > 0) return false;
  }
  return true;
}

CashFlowStream make_stream(std::initializer_list<std::pair<Rational, Rational>> items) {
  std::vector<Transaction> raw;
  raw.reserve(items.size());
  for (const auto& [t, a] : items) raw.push_back({t, a});
  return CashFlowStream::normalize(std::move(raw));
}

}  // namespace ratecap
