#pragma once

#include "ratecap/cashflow.hpp"
#include "ratecap/rational.hpp"

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace ratecap::cli {

enum class TimeConvention { RationalTimes, ACT365F };

struct LoanDocument {
  std::string currency;
  TimeConvention convention = TimeConvention::RationalTimes;
  CashFlowStream stream;
};

/// Throws Error(Parse) on malformed JSON, unknown fields or bad times/amounts.
LoanDocument parse_loan(const nlohmann::ordered_json& doc);
LoanDocument parse_loan_text(const std::string& text);
LoanDocument parse_loan_file(const std::filesystem::path& path);

/// Canonical form: RationalTimes convention, normalized transactions, rationals as "p/q".
nlohmann::ordered_json serialize_loan(const LoanDocument& loan);

/// Days between two ISO dates (YYYY-MM-DD), b - a.
long days_between(const std::string& a, const std::string& b);

struct JurisdictionConfig {
  std::optional<Rational> cap_effective;
  std::optional<Rational> floor_effective;
  std::string compounding_period = "annual";
};

JurisdictionConfig parse_config(const nlohmann::ordered_json& doc);
JurisdictionConfig parse_config_file(const std::filesystem::path& path);

}  // namespace ratecap::cli
