#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "revtype/config.hpp"

namespace revtype::cli {

/// What a command hands back to the front end: the machine-readable report in
/// both formats and a short human-readable summary.
struct CommandResult {
  int exit_code = kSuccess;
  nlohmann::json report;
  std::vector<std::string> csv_header;
  std::vector<std::vector<double>> csv_rows;
  std::string summary;
};

/// Shortest round-trip decimal form.
std::string format_number(double v);

std::string render_csv(const CommandResult& result);
/// Two-space indented JSON with a trailing newline.
std::string render_json(const CommandResult& result);

nlohmann::json config_to_json(const RunConfig& config);

}  // namespace revtype::cli
