#pragma once

#include "loan_io.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace ratecap::cli {

enum ExitCode : int { kLegal = 0, kInputError = 2, kUsurious = 3, kIndeterminate = 4 };

struct Options {
  std::string command;
  std::filesystem::path loan;
  std::optional<std::string> cap;
  std::optional<std::string> floor;
  std::optional<std::filesystem::path> config;
  bool float_mode = false;
  bool json = false;
  std::size_t grid = 10000;
  std::optional<double> s_max;
};

struct Outcome {
  int exit_code = kLegal;
  nlohmann::ordered_json report;
};

Outcome run_classify(const LoanDocument& loan, const Options& opts);
Outcome run_irr(const LoanDocument& loan, const Options& opts);
Outcome run_joint(const LoanDocument& loan, const Options& opts);
Outcome run_oracle(const LoanDocument& loan, const Options& opts);

/// Loads the loan and dispatches on opts.command. Throws ratecap::Error on bad input.
Outcome run(const Options& opts);

/// Plain-text rendering of a report for terminals.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace ratecap::cli
