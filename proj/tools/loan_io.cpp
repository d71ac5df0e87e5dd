#include "loan_io.hpp"

#include "ratecap/error.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <vector>

namespace ratecap::cli {

namespace {

using nlohmann::ordered_json;

void reject_unknown(const ordered_json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorCode::Parse, where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error(ErrorCode::Parse, "unknown field '" + key + "' in " + where);
  }
}

std::string exact_text(const ordered_json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorCode::Parse, where + " must be a string (or an integer)");
}

std::chrono::sys_days parse_date(const std::string& text) {
  int y = 0;
  unsigned m = 0, d = 0;
  char dash1 = 0, dash2 = 0;
  std::istringstream in(text);
  in >> y >> dash1 >> m >> dash2 >> d;
  if (!in || dash1 != '-' || dash2 != '-' || text.size() != 10 || in.peek() != EOF)
    throw Error(ErrorCode::Parse, "bad date '" + text + "', expected YYYY-MM-DD");
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok()) throw Error(ErrorCode::Parse, "no such date '" + text + "'");
  return std::chrono::sys_days{ymd};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json parse_json(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, what + ": " + e.what());
  }
}

}  // namespace

long days_between(const std::string& a, const std::string& b) {
  return (parse_date(b) - parse_date(a)).count();
}

LoanDocument parse_loan(const ordered_json& doc) {
  reject_unknown(doc, {"currency", "convention", "transactions"}, "loan document");
  LoanDocument loan;
  if (doc.contains("currency")) {
    if (!doc["currency"].is_string()) throw Error(ErrorCode::Parse, "currency must be a string");
    loan.currency = doc["currency"].get<std::string>();
  }
  if (doc.contains("convention")) {
    const auto& c = doc["convention"];
    if (c == "RationalTimes")
      loan.convention = TimeConvention::RationalTimes;
    else if (c == "ACT365F")
      loan.convention = TimeConvention::ACT365F;
    else
      throw Error(ErrorCode::Parse, "convention must be RationalTimes or ACT365F");
  }
  if (!doc.contains("transactions") || !doc["transactions"].is_array())
    throw Error(ErrorCode::Parse, "loan document needs a transactions array");

  std::vector<std::string> times;
  std::vector<Rational> amounts;
  for (const auto& tx : doc["transactions"]) {
    reject_unknown(tx, {"t", "amount"}, "transaction");
    if (!tx.contains("t") || !tx.contains("amount")) throw Error(ErrorCode::Parse, "transaction needs t and amount");
    times.push_back(exact_text(tx["t"], "t"));
    amounts.push_back(parse_rational(exact_text(tx["amount"], "amount")));
  }

  std::vector<Transaction> raw;
  if (loan.convention == TimeConvention::ACT365F && !times.empty()) {
    std::vector<std::chrono::sys_days> dates;
    for (const auto& t : times) dates.push_back(parse_date(t));
    const auto first = *std::min_element(dates.begin(), dates.end());
    for (std::size_t i = 0; i < dates.size(); ++i) {
      Rational years((dates[i] - first).count(), 365);
      years.canonicalize();
      raw.push_back({years, amounts[i]});
    }
  } else {
    for (std::size_t i = 0; i < times.size(); ++i) raw.push_back({parse_rational(times[i]), amounts[i]});
  }
  loan.stream = CashFlowStream::normalize(std::move(raw));
  return loan;
}

LoanDocument parse_loan_text(const std::string& text) { return parse_loan(parse_json(text, "loan document")); }

LoanDocument parse_loan_file(const std::filesystem::path& path) {
  return parse_loan(parse_json(read_file(path), path.string()));
}

ordered_json serialize_loan(const LoanDocument& loan) {
  ordered_json out;
  out["currency"] = loan.currency;
  out["convention"] = "RationalTimes";
  out["transactions"] = ordered_json::array();
  for (const auto& tx : loan.stream.transactions())
    out["transactions"].push_back({{"t", to_string(tx.time)}, {"amount", to_string(tx.amount)}});
  return out;
}

JurisdictionConfig parse_config(const ordered_json& doc) {
  reject_unknown(doc, {"cap_effective", "floor_effective", "compounding_period"}, "jurisdiction config");
  JurisdictionConfig cfg;
  if (doc.contains("cap_effective")) cfg.cap_effective = parse_percent(exact_text(doc["cap_effective"], "cap_effective"));
  if (doc.contains("floor_effective"))
    cfg.floor_effective = parse_percent(exact_text(doc["floor_effective"], "floor_effective"));
  if (doc.contains("compounding_period")) {
    if (doc["compounding_period"] != "annual")
      throw Error(ErrorCode::InvalidConfig, "only annual compounding is supported");
    cfg.compounding_period = "annual";
  }
  if (cfg.floor_effective && cfg.cap_effective && *cfg.floor_effective > *cfg.cap_effective)
    throw Error(ErrorCode::InvalidConfig, "floor exceeds cap");
  if (cfg.floor_effective && sgn(*cfg.floor_effective) < 0)
    throw Error(ErrorCode::InvalidConfig, "floor must be nonnegative");
  return cfg;
}

JurisdictionConfig parse_config_file(const std::filesystem::path& path) {
  return parse_config(parse_json(read_file(path), path.string()));
}

}  // namespace ratecap::cli
