#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include <revtype/case2.hpp>
#include <revtype/expression.hpp>
#include <revtype/profile.hpp>

namespace revtype::cli {

enum class Format { Json, Csv };

/// Everything a command needs; the CLI layer fills it from flags.
struct RunConfig {
  std::optional<std::string> catalog;
  std::optional<std::filesystem::path> profile;
  ParamMap params;
  GridSpec grid{32, 32};
  Tolerances tol;
  int validation_samples = 101;
  std::optional<std::filesystem::path> output;
  Format format = Format::Json;
  std::uint64_t seed = 1;
  double lambda = 0.0;
  double mu = 0.0;
  std::optional<double> check_tolerance;
};

/// Exit codes shared by every command.
enum ExitCode : int { kSuccess = 0, kInputError = 1, kInconclusive = 2 };

/// Throws std::invalid_argument naming the offending field.
void validate_config(const RunConfig& config);

}  // namespace revtype::cli
