#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mvalg/description.hpp"

namespace mvalg::cli {

inline constexpr const char* kToolName = "mvalg";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 success, 1 failed mathematical check, 2 input error,
/// 3 resource limit.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitResourceLimit = 3,
};

struct Options {
  std::string command;                    // validate|spectrum|ideals|complete|check|signature
  std::string subcommand;                 // method / check name / signature operation
  std::optional<std::string> other_text;  // second description for binary operations
  bool json_output = false;
  bool verify_witness = false;
  bool strict_divisibility = false;
  Limits limits;
};

struct Outcome {
  nlohmann::json report;
  int exit_code = kExitOk;
  std::string rendered;  // exactly what the tool prints
};

/// Runs one analysis on the description text(s). All file handling lives in
/// the binary; this entry point is what the tests call.
Outcome run_on_text(const Options& opts, const std::string& input_text);

std::string render_text(const nlohmann::json& report);

}  // namespace mvalg::cli
