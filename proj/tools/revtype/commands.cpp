#include "revtype/commands.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <revtype/errors.hpp>
#include <revtype/finite_type.hpp>
#include <revtype/profile_io.hpp>
#include <revtype/serialization.hpp>

namespace revtype::cli {

namespace {

nlohmann::json envelope(const char* command, const RunConfig& config) {
  nlohmann::json report;
  report["command"] = command;
  report["config"] = config_to_json(config);
  return report;
}

void describe_surface(nlohmann::json& report, const LoadedSurface& surface) {
  report["config"]["surface"]["params"] = nlohmann::json::object();
  for (const auto& [k, v] : surface.params) report["config"]["surface"]["params"][k] = v;
  report["config"]["surface"]["profile"] = profile_to_json(surface.profile);
}

// Returns false (and fills result) when the profile does not validate.
bool validate_or_fail(const RunConfig& config, const LoadedSurface& surface, CommandResult& result) {
  const ValidationReport v = validate_profile(surface.profile, config.validation_samples, config.tol);
  result.report["validation"] = v;
  if (v.passed) return true;
  result.exit_code = kInputError;
  std::ostringstream os;
  os << surface.profile.name() << ": validation failed\n";
  for (const auto& issue : v.issues) os << "  " << issue << '\n';
  result.summary = os.str();
  return false;
}

std::string surface_label(const RunConfig& config, const LoadedSurface& surface) {
  std::ostringstream os;
  os << surface.profile.name();
  if (!surface.params.empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : surface.params) {
      os << (first ? "" : ", ") << k << "=" << format_number(v);
      first = false;
    }
    os << ")";
  }
  os << ", grid " << config.grid.n_s << "x" << config.grid.n_theta;
  return os.str();
}

}  // namespace

LoadedSurface load_surface(const RunConfig& config) {
  if (config.catalog && config.profile) throw std::invalid_argument("give either --catalog or --profile, not both");
  if (config.catalog) {
    CatalogEntry entry = catalog_entry(*config.catalog, config.params);
    ParamMap effective = catalog_defaults(*config.catalog);
    for (const auto& [k, v] : config.params) effective[k] = v;
    ProfileCurve p = entry.profile;
    return {std::move(p), std::move(effective), std::move(entry)};
  }
  if (config.profile) {
    if (!config.params.empty()) {
      // Command-line values override the file's parameters.
      ProfileCurve base = read_profile(*config.profile);
      nlohmann::json doc = profile_to_json(base);
      for (const auto& [k, v] : config.params) {
        if (!base.params().contains(k)) throw ProfileError("profile has no parameter '" + k + "'");
        doc["params"][k] = v;
      }
      ProfileCurve p = profile_from_json(doc);
      ParamMap params = p.params();
      return {std::move(p), std::move(params), std::nullopt};
    }
    ProfileCurve p = read_profile(*config.profile);
    ParamMap params = p.params();
    return {std::move(p), std::move(params), std::nullopt};
  }
  throw std::invalid_argument("no surface given; use --catalog NAME or --profile FILE");
}

CommandResult cmd_validate(const RunConfig& config) {
  validate_config(config);
  const LoadedSurface surface = load_surface(config);
  CommandResult result;
  result.report = envelope("validate", config);
  describe_surface(result.report, surface);
  const ValidationReport v = validate_profile(surface.profile, config.validation_samples, config.tol);
  result.report["validation"] = v;
  result.exit_code = v.passed ? kSuccess : kInputError;

  result.csv_header = {"s", "f", "g", "f_prime", "g_prime", "arc_defect", "fg_prime", "excluded"};
  for (double s : uniform_samples(surface.profile.domain(), config.validation_samples)) {
    const Jet3 f = surface.profile.f_jet(s);
    const Jet3 g = surface.profile.g_jet(s);
    result.csv_rows.push_back({s, f[0], g[0], f[1], g[1], std::abs(f[1] * f[1] + g[1] * g[1] - 1.0), f[1] * g[1],
                               surface.profile.is_excluded(s) ? 1.0 : 0.0});
  }

  std::ostringstream os;
  os << surface.profile.name() << ": " << (v.passed ? "valid" : "INVALID") << ", arclength defect "
     << format_number(v.max_arc_defect) << ", min f " << format_number(v.min_f) << '\n';
  for (const auto& issue : v.issues) os << "  " << issue << '\n';
  result.summary = os.str();
  return result;
}

CommandResult cmd_classify(const RunConfig& config) {
  validate_config(config);
  const LoadedSurface surface = load_surface(config);
  CommandResult result;
  result.report = envelope("classify", config);
  describe_surface(result.report, surface);
  if (!validate_or_fail(config, surface, result)) return result;

  const Grid grid = build_grid(surface.profile, config.grid, config.tol);
  const std::vector<FitSample> samples = fit_samples(grid);
  FitReport fit = fit_samples_matrix(samples, config.tol);
  fit.grid = config.grid;
  fit.excluded_declared = grid.excluded_declared;
  fit.excluded_parabolic = grid.excluded_parabolic;
  fit.excluded_domain = grid.excluded_domain;
  fit.structure = structure_check(fit, config.tol.structure);
  result.report["fit"] = fit;
  if (surface.entry) result.report["expected_verdict"] = to_string(surface.entry->truth.verdict);
  result.exit_code = fit.verdict == Verdict::Inconclusive ? kInconclusive : kSuccess;

  result.csv_header = {"s", "theta", "x1", "x2", "x3", "lap1", "lap2", "lap3", "fit1", "fit2", "fit3", "residual"};
  for (const FitSample& smp : samples) {
    const Vec3 ax = fit.A * smp.x;
    result.csv_rows.push_back({smp.s, smp.theta, smp.x[0], smp.x[1], smp.x[2], smp.lap[0], smp.lap[1], smp.lap[2],
                               ax[0], ax[1], ax[2], (smp.lap - ax).norm()});
  }

  std::ostringstream os;
  os << surface_label(config, surface) << '\n';
  os << "  verdict         " << to_string(fit.verdict) << '\n';
  os << "  rel residual    " << format_number(fit.rel_residual) << (fit.residual_is_absolute ? " (absolute)" : "") << '\n';
  os << "  sup|Dx|/sup|x|  " << format_number(fit.sup_position > 0 ? fit.sup_laplacian / fit.sup_position : 0.0) << '\n';
  os << "  lambda, mu      " << format_number(fit.lambda) << ", " << format_number(fit.mu) << '\n';
  os << "  structure       offdiag " << format_number(fit.structure.offdiag_max) << ", a11-a22 "
     << format_number(fit.structure.diag_split) << (fit.structure.passed ? "" : "  (pattern violated)") << '\n';
  if (!fit.diagnostic.empty()) os << "  " << fit.diagnostic << '\n';
  result.summary = os.str();
  return result;
}

CommandResult cmd_verify(const RunConfig& config, Check check) {
  validate_config(config);
  const LoadedSurface surface = load_surface(config);
  CommandResult result;
  result.report = envelope("verify", config);
  result.report["check"] = to_string(check);
  describe_surface(result.report, surface);
  if (!validate_or_fail(config, surface, result)) return result;

  const Grid grid = build_grid(surface.profile, config.grid, config.tol);
  const double tol = config.check_tolerance.value_or(default_check_tolerance(check));
  CheckReport r;
  switch (check) {
    case Check::LaplacianIdentity: r = check_laplacian_identity(grid, tol); break;
    case Check::CurvatureQuotient: r = check_curvature_quotient(surface.profile, grid, tol); break;
    case Check::FormulaEquivalence: r = check_formula_equivalence(grid, config.seed, tol, config.tol.parab); break;
    case Check::ReducedSystem: r = check_reduced_system(grid, config.lambda, config.mu, tol); break;
    case Check::DerivativeRelation: r = check_derivative_relation(grid, config.lambda, config.mu, tol, config.tol.fit); break;
  }
  result.report["result"] = r;
  result.report["excluded"] = {{"declared", grid.excluded_declared},
                               {"parabolic", grid.excluded_parabolic},
                               {"domain", grid.excluded_domain}};
  result.exit_code = r.passed ? kSuccess : kInconclusive;

  result.csv_header = {"s", "theta", "value", "reference", "residual"};
  for (const CheckRow& row : r.rows) result.csv_rows.push_back({row.s, row.theta, row.value, row.reference, row.residual});

  std::ostringstream os;
  os << surface_label(config, surface) << '\n';
  os << "  " << to_string(check) << ": max residual " << format_number(r.max_residual) << " at s="
     << format_number(r.worst_s) << ", theta=" << format_number(r.worst_theta) << " (tolerance " << format_number(tol)
     << ") " << (r.passed ? "PASS" : "FAIL") << '\n';
  result.summary = os.str();
  return result;
}

CommandResult cmd_case2(const RunConfig& config, const Case2ScanConfig& scan) {
  CommandResult result;
  result.report["command"] = "case2";
  result.report["config"] = {{"seed", config.seed},
                             {"output", config.output ? nlohmann::json(config.output->generic_string()) : nlohmann::json(nullptr)},
                             {"format", config.format == Format::Json ? "json" : "csv"}};
  const Case2Certificate cert = case2_scan(scan);
  const bool certified = cert.bounded_away_from_zero && cert.cells.uncertified_leaves == 0 && cert.mu_zero.contradiction;
  result.report["certificate"] = cert;
  result.report["certified"] = certified;
  result.exit_code = certified ? kSuccess : kInconclusive;

  result.csv_header = {"lambda", "mu", "skipped", "c4", "c2", "c0", "max_abs"};
  const double half = 0.5 * scan.step;
  for (double l : case2_axis(scan.lambda_min, scan.lambda_max, scan.step)) {
    for (double m : case2_axis(scan.mu_min, scan.mu_max, scan.step)) {
      const QuarticCoefficients q = quartic_coefficients(l, m);
      const bool skipped = std::abs(l - m) < half;
      result.csv_rows.push_back({l, m, skipped ? 1.0 : 0.0, q.c4, q.c2, q.c0, q.max_abs()});
    }
  }

  std::ostringstream os;
  os << "case2 scan: " << cert.points_scanned << " points, " << cert.points_skipped_diagonal
     << " skipped on the diagonal\n";
  if (cert.min_max_abs_coeff) {
    os << "  min max|c| = " << format_number(*cert.min_max_abs_coeff) << " at lambda="
       << format_number(cert.argmin->lambda) << ", mu=" << format_number(cert.argmin->mu) << " (c4="
       << format_number(cert.argmin->coeffs.c4) << ", c2=" << format_number(cert.argmin->coeffs.c2)
       << ", c0=" << format_number(cert.argmin->coeffs.c0) << ")\n";
  } else {
    os << "  no off-diagonal points in range\n";
  }
  os << "  cells: " << cert.cells.certified_leaves << " certified leaves, " << cert.cells.uncertified_leaves
     << " uncertified\n";
  os << "  " << (certified ? "CERTIFIED" : "NOT CERTIFIED") << '\n';
  result.summary = os.str();
  return result;
}

CommandResult cmd_eval(const std::string& expression, double s, const ParamMap& params) {
  const Expr e = parse(expression, params);
  const Jet3 j = eval_jet3(e, s, params);
  CommandResult result;
  result.report = {{"command", "eval"},
                   {"expression", expression},
                   {"parsed", unparse(e)},
                   {"s", s},
                   {"params", params},
                   {"jet", {j[0], j[1], j[2], j[3]}}};
  result.csv_header = {"s", "value", "d1", "d2", "d3"};
  result.csv_rows.push_back({s, j[0], j[1], j[2], j[3]});
  std::ostringstream os;
  os << unparse(e) << " at s=" << format_number(s) << ": " << format_number(j[0]) << ", d/ds " << format_number(j[1])
     << ", d2/ds2 " << format_number(j[2]) << ", d3/ds3 " << format_number(j[3]) << '\n';
  result.summary = os.str();
  return result;
}

CommandResult cmd_catalog(const RunConfig& config, const std::optional<std::string>& name) {
  CommandResult result;
  if (!name) {
    result.report["command"] = "catalog";
    result.report["surfaces"] = nlohmann::json::array();
    std::ostringstream os;
    for (const auto& n : catalog_names()) {
      const CatalogEntry e = catalog_entry(n);
      result.report["surfaces"].push_back(
          {{"name", n}, {"defaults", catalog_defaults(n)}, {"description", e.doc}, {"curvature", e.truth.curvature}});
      os << n << ": " << e.doc << '\n';
    }
    result.summary = os.str();
    return result;
  }
  const CatalogEntry e = catalog_entry(*name, config.params);
  result.report = profile_to_json(e.profile);
  result.summary = e.name + " profile exported\n";
  return result;
}

void validate_config(const RunConfig& c) {
  if (c.grid.n_s < 2) throw std::invalid_argument("--ns must be at least 2");
  if (c.grid.n_theta < 4) throw std::invalid_argument("--ntheta must be at least 4");
  if (c.validation_samples < 2) throw std::invalid_argument("--samples must be at least 2");
  if (!(c.tol.arc > 0)) throw std::invalid_argument("--tol-arc must be positive");
  if (!(c.tol.parab > 0)) throw std::invalid_argument("--tol-parab must be positive");
  if (!(c.tol.fit > 0)) throw std::invalid_argument("--tol-fit must be positive");
  if (!(c.tol.structure > 0)) throw std::invalid_argument("--tol-struct must be positive");
  if (c.check_tolerance && !(*c.check_tolerance > 0)) throw std::invalid_argument("--check-tol must be positive");
}

}  // namespace revtype::cli
