#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace mgk {

enum class ExitCode : int {
  passed = 0,          // the check holds
  failed = 1,          // the mathematical verdict is false
  input_error = 2,     // unreadable, malformed or unusable input
  bound_exceeded = 3,  // an exhaustive computation refused to run
};

struct CommandOptions {
  std::optional<std::string> set;    // comma-separated element names
  std::optional<std::string> ops;    // comma-separated operation ids
  std::optional<std::string> order;  // comma-separated oriented sequence
  std::optional<std::size_t> exhaustive_bound;
  bool json = false;
  bool timing = false;  // adds wall-clock time; the report is then not reproducible
};

struct CommandResult {
  ExitCode exit = ExitCode::passed;
  nlohmann::ordered_json report;
  std::string rendered;  // text or JSON, per CommandOptions::json
};

/// Commands: validate, classify, subspace, cosets, normal, series,
/// maximal-series, span, generators.
CommandResult run_command(std::string_view command, std::string_view instance_text,
                          const CommandOptions& options);

/// Same, reading the instance from `path` (unreadable file: exit 2).
CommandResult run_command_on_file(std::string_view command, const std::string& path,
                                  const CommandOptions& options);

/// Indented "key: value" rendering of a report document.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace mgk
