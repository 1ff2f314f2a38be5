#include "revtype/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include <revtype/serialization.hpp>

namespace revtype::cli {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string render_csv(const CommandResult& result) {
  std::ostringstream os;
  for (std::size_t i = 0; i < result.csv_header.size(); ++i) os << (i ? "," : "") << result.csv_header[i];
  os << '\n';
  for (const auto& row : result.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string render_json(const CommandResult& result) { return result.report.dump(2) + "\n"; }

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  if (c.catalog) {
    j["surface"] = {{"source", "catalog"}, {"name", *c.catalog}};
  } else if (c.profile) {
    j["surface"] = {{"source", "file"}, {"path", c.profile->generic_string()}};
  } else {
    j["surface"] = nullptr;
  }
  j["grid"] = c.grid;
  j["tolerances"] = c.tol;
  j["validation_samples"] = c.validation_samples;
  j["output"] = c.output ? nlohmann::json(c.output->generic_string()) : nlohmann::json(nullptr);
  j["format"] = c.format == Format::Json ? "json" : "csv";
  j["seed"] = c.seed;
  j["lambda"] = c.lambda;
  j["mu"] = c.mu;
  j["check_tolerance"] = c.check_tolerance ? nlohmann::json(*c.check_tolerance) : nlohmann::json(nullptr);
  return j;
}

}  // namespace revtype::cli
