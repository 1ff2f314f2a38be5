#include "revtype/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include <revtype/errors.hpp>

#include "revtype/commands.hpp"

namespace revtype::cli {

namespace {

ParamMap parse_params(const std::vector<std::string>& items) {
  ParamMap out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--param expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw std::invalid_argument("--param " + name + ": '" + text + "' is not a number");
    }
    out[name] = value;
  }
  return out;
}

struct Flags {
  RunConfig config;
  std::vector<std::string> params;
  std::string output;
  std::string format = "json";
  std::string check;
  std::string catalog;
  std::string profile;
  std::optional<std::string> export_name;
  Case2ScanConfig scan;
  std::optional<double> scan_lambda;
  std::optional<double> scan_mu;
  std::string expression;
  double eval_s = 0.0;
};

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("-o,--output", f.output, "Write the report to this file");
  cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

void add_surface_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--catalog", f.catalog, "Catalog surface (catenoid, sphere, torus, broken-diagonal)");
  cmd->add_option("--profile", f.profile, "Profile definition file (JSON)");
  cmd->add_option("--param", f.params, "Parameter override name=value (repeatable)");
  cmd->add_option("--ns", f.config.grid.n_s, "Grid rings along s")->capture_default_str();
  cmd->add_option("--ntheta", f.config.grid.n_theta, "Grid angles per ring")->capture_default_str();
  cmd->add_option("--samples", f.config.validation_samples, "Validation samples")->capture_default_str();
  cmd->add_option("--tol-arc", f.config.tol.arc, "Arclength tolerance")->capture_default_str();
  cmd->add_option("--tol-parab", f.config.tol.parab, "Parabolic-point tolerance")->capture_default_str();
  cmd->add_option("--tol-fit", f.config.tol.fit, "Fit tolerance")->capture_default_str();
  cmd->add_option("--tol-struct", f.config.tol.structure, "Structure-check tolerance")->capture_default_str();
  cmd->add_option("--seed", f.config.seed, "Seed for randomized sampling")->capture_default_str();
  add_output_flags(cmd, f);
}

void finish_config(Flags& f) {
  f.config.params = parse_params(f.params);
  if (!f.catalog.empty()) f.config.catalog = f.catalog;
  if (!f.profile.empty()) f.config.profile = f.profile;
  if (!f.output.empty()) f.config.output = f.output;
  f.config.format = f.format == "csv" ? Format::Csv : Format::Json;
}

int emit(const CommandResult& result, const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string body = config.format == Format::Csv && !result.csv_header.empty() ? render_csv(result)
                                                                                       : render_json(result);
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.output->string() << "'\n";
      return kInputError;
    }
    file << body;
    out << result.summary;
  } else {
    out << body;
    err << result.summary;
  }
  return result.exit_code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Third-fundamental-form Laplacian checks on surfaces of revolution", "revtype"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* validate = app.add_subcommand("validate", "Check the arclength and regularity assumptions of a profile");
  add_surface_flags(validate, f);

  CLI::App* classify = app.add_subcommand("classify", "Fit Delta^III x = A x and classify the surface");
  add_surface_flags(classify, f);

  CLI::App* verify = app.add_subcommand("verify", "Evaluate one identity over the grid");
  verify->add_option("check", f.check, "laplacian-identity | curvature-quotient | formula-equivalence | reduced-system | derivative-relation")
      ->required()
      ->check(CLI::IsMember({"laplacian-identity", "curvature-quotient", "formula-equivalence", "reduced-system", "derivative-relation"}));
  add_surface_flags(verify, f);
  verify->add_option("--lambda", f.config.lambda, "lambda for the reduced-system checks")->capture_default_str();
  verify->add_option("--mu", f.config.mu, "mu for the reduced-system checks")->capture_default_str();
  verify->add_option("--check-tol", f.config.check_tolerance, "Override the check's pass threshold");

  CLI::App* case2 = app.add_subcommand("case2", "Scan the lambda != mu coefficient system");
  case2->add_option("--lambda-min", f.scan.lambda_min, "Lower end of the lambda range")->capture_default_str();
  case2->add_option("--lambda-max", f.scan.lambda_max, "Upper end of the lambda range")->capture_default_str();
  case2->add_option("--mu-min", f.scan.mu_min, "Lower end of the mu range")->capture_default_str();
  case2->add_option("--mu-max", f.scan.mu_max, "Upper end of the mu range")->capture_default_str();
  case2->add_option("--lambda", f.scan_lambda, "Single lambda value (sets both bounds)");
  case2->add_option("--mu", f.scan_mu, "Single mu value (sets both bounds)");
  case2->add_option("--step", f.scan.step, "Grid spacing in both directions")->capture_default_str();
  case2->add_option("--threshold", f.scan.threshold, "Required lower bound of max|c|")->capture_default_str();
  case2->add_option("--max-depth", f.scan.max_depth, "Cell bisection depth")->capture_default_str();
  case2->add_option("--seed", f.config.seed, "Recorded in the report; the scan is deterministic")->capture_default_str();
  add_output_flags(case2, f);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression and its s-derivatives");
  eval->add_option("expression", f.expression)->required();
  eval->add_option("--s", f.eval_s, "Point of evaluation")->required();
  eval->add_option("--param", f.params, "Parameter name=value (repeatable)");
  add_output_flags(eval, f);

  CLI::App* catalog = app.add_subcommand("catalog", "List catalog surfaces or export one as a profile file");
  catalog->add_option("name", f.export_name, "Surface to export");
  catalog->add_option("--param", f.params, "Parameter override name=value (repeatable)");
  add_output_flags(catalog, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    finish_config(f);
    CommandResult result;
    if (*validate) {
      result = cmd_validate(f.config);
    } else if (*classify) {
      result = cmd_classify(f.config);
    } else if (*verify) {
      result = cmd_verify(f.config, check_from_string(f.check));
    } else if (*case2) {
      if (f.scan_lambda) f.scan.lambda_min = f.scan.lambda_max = *f.scan_lambda;
      if (f.scan_mu) f.scan.mu_min = f.scan.mu_max = *f.scan_mu;
      result = cmd_case2(f.config, f.scan);
    } else if (*eval) {
      result = cmd_eval(f.expression, f.eval_s, f.config.params);
    } else {
      result = cmd_catalog(f.config, f.export_name);
    }
    return emit(result, f.config, out, err);
  } catch (const revtype::Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace revtype::cli
