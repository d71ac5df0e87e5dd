#include "ratecap/rational.hpp"

#include "ratecap/error.hpp"

#include <cctype>
#include <cmath>

namespace ratecap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTime: return "InvalidTime";
    case ErrorCode::InvalidScale: return "InvalidScale";
    case ErrorCode::InvalidRate: return "InvalidRate";
    case ErrorCode::NotAligned: return "NotAligned";
    case ErrorCode::ZeroPoly: return "ZeroPoly";
    case ErrorCode::EndpointRoot: return "EndpointRoot";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotInCapMinus: return "NotInCapMinus";
    case ErrorCode::NonExactFactor: return "NonExactFactor";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "zero";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::Parse, "not an integer: '" + std::string(s) + "'");
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

Rational parse_decimal(std::string_view s) {
  const std::string original(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const Integer ex = parse_integer(s.substr(e + 1));
    if (!ex.fits_slong_p() || abs(ex) > 100000) throw Error(ErrorCode::Parse, "exponent out of range: " + original);
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw Error(ErrorCode::Parse, "malformed decimal: '" + original + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw Error(ErrorCode::Parse, "malformed decimal: '" + original + "'");
    digits = std::string(s);
  }
  Rational v{Integer(digits, 10)};
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0)
    v *= ten_pow;
  else
    v /= ten_pow;
  v.canonicalize();
  return neg ? Rational(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(trim(text.substr(0, slash)));
    const Rational den = parse_decimal(trim(text.substr(slash + 1)));
    if (sgn(den) == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + std::string(text) + "'");
    Rational v = num / den;
    v.canonicalize();
    return v;
  }
  return parse_decimal(text);
}

Rational parse_percent(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.back() == '%') text.remove_suffix(1);
  Rational v = parse_rational(text) / 100;
  v.canonicalize();
  return v;
}

std::string to_string(const Rational& v) {
  Rational c(v);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational pow(const Rational& base, std::int64_t exponent) {
  const bool invert = exponent < 0;
  const auto e = static_cast<unsigned long>(invert ? -exponent : exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  if (invert) {
    if (sgn(n) == 0) throw Error(ErrorCode::InvalidRate, "zero to a negative power");
    std::swap(n, d);
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_root(const Rational& value, std::uint64_t q) {
  if (sgn(value) <= 0 || q == 0) return std::nullopt;
  Integer n, d;
  if (mpz_root(n.get_mpz_t(), value.get_num_mpz_t(), q) == 0) return std::nullopt;
  if (mpz_root(d.get_mpz_t(), value.get_den_mpz_t(), q) == 0) return std::nullopt;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational power_of_two_ceil(const Rational& value) {
  Rational p(1);
  while (p < value) p *= 2;
  while (p / 2 >= value) p /= 2;
  return p;
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::Parse, "non-finite value");
  Rational r(v);
  r.canonicalize();
  return r;
}

}  // namespace ratecap
