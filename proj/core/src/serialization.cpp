#include "revtype/serialization.hpp"

namespace revtype {

using nlohmann::json;

json matrix_to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return rows;
}

void to_json(json& j, const Tolerances& t) {
  j = {{"tol_arc", t.arc}, {"tol_parab", t.parab}, {"tol_fit", t.fit}, {"tol_struct", t.structure}};
}

void to_json(json& j, const GridSpec& g) { j = {{"n_s", g.n_s}, {"n_theta", g.n_theta}}; }

void to_json(json& j, const ValidationReport& r) {
  j = {{"samples", r.samples},
       {"max_arc_defect", r.max_arc_defect},
       {"min_f", r.min_f},
       {"min_abs_fg_prime", r.min_abs_fg_prime},
       {"max_abs_fg_prime", r.max_abs_fg_prime},
       {"min_parabolic_measure", r.min_parabolic_measure},
       {"excluded_declared", r.excluded_declared},
       {"excluded_parabolic", r.excluded_parabolic},
       {"passed", r.passed},
       {"issues", r.issues}};
}

void to_json(json& j, const StructureDiagnostics& d) {
  j = {{"offdiag_max", d.offdiag_max}, {"diag_split", d.diag_split}, {"passed", d.passed}};
}

void to_json(json& j, const FitReport& r) {
  j = {{"A", matrix_to_json(r.A)},
       {"rel_residual", r.rel_residual},
       {"residual_is_absolute", r.residual_is_absolute},
       {"residual_norm", r.residual_norm},
       {"laplacian_norm", r.laplacian_norm},
       {"sup_laplacian", r.sup_laplacian},
       {"sup_position", r.sup_position},
       {"structure", r.structure},
       {"lambda", r.lambda},
       {"mu", r.mu},
       {"verdict", to_string(r.verdict)},
       {"rank", r.rank},
       {"points_used", r.points_used},
       {"grid", r.grid},
       {"excluded", {{"declared", r.excluded_declared}, {"parabolic", r.excluded_parabolic}, {"domain", r.excluded_domain}}},
       {"diagnostic", r.diagnostic}};
}

void to_json(json& j, const IdentityResidual& r) {
  j = {{"max_residual", r.max_residual}, {"worst_s", r.worst_s}, {"worst_theta", r.worst_theta}, {"points", r.points}};
}

void to_json(json& j, const ReducedResiduals& r) {
  j = {{"coordinate_residual", r.coordinate_residual}, {"quotient_residual", r.quotient_residual}, {"quotient_slope_residual", r.quotient_slope_residual}, {"samples", r.samples}};
}

void to_json(json& j, const DerivativeRelationCheck& r) {
  j = {{"defect", r.defect}, {"reduced_system_residual", r.reduced_system_residual}, {"applicable", r.applicable}, {"samples", r.samples}};
}

void to_json(json& j, const QuarticCoefficients& q) { j = {{"c4", q.c4}, {"c2", q.c2}, {"c0", q.c0}}; }

void to_json(json& j, const Case2Coefficients& c) {
  j = {{"a", c.a}, {"b", c.b}, {"a1", c.a1}, {"b1", c.b1}, {"poly_coeffs", c.poly}};
}

void to_json(json& j, const EliminationCheck& e) {
  j = {{"factor", e.factor},
       {"max_zero_set_discrepancy", e.max_zero_set_discrepancy},
       {"ratio_min", e.ratio_min},
       {"ratio_max", e.ratio_max},
       {"ratio_spread", e.ratio_spread},
       {"zero_sets_match", e.zero_sets_match},
       {"samples", e.samples}};
}

void to_json(json& j, const Case2ScanConfig& c) {
  j = {{"lambda_min", c.lambda_min}, {"lambda_max", c.lambda_max}, {"mu_min", c.mu_min},
       {"mu_max", c.mu_max},         {"step", c.step},             {"threshold", c.threshold},
       {"max_depth", c.max_depth}};
}

void to_json(json& j, const ScanArgmin& a) { j = {{"lambda", a.lambda}, {"mu", a.mu}, {"coeffs", a.coeffs}}; }

void to_json(json& j, const Case2Certificate& c) {
  j = {{"config", c.config},
       {"points_scanned", c.points_scanned},
       {"points_skipped_diagonal", c.points_skipped_diagonal},
       {"min_max_abs_coeff", c.min_max_abs_coeff ? json(*c.min_max_abs_coeff) : json(nullptr)},
       {"argmin", c.argmin ? json(*c.argmin) : json(nullptr)},
       {"bounded_away_from_zero", c.bounded_away_from_zero},
       {"cells",
        {{"cells", c.cells.cells},
         {"certified_leaves", c.cells.certified_leaves},
         {"uncertified_leaves", c.cells.uncertified_leaves},
         {"min_lower_bound", c.cells.min_lower_bound},
         {"band_halfwidth", c.cells.band_halfwidth},
         {"uncertified", c.cells.uncertified}}},
       {"mu_zero",
        {{"lambda_from_c4", c.mu_zero.lambda_from_c4},
         {"min_lambda_sin2_plus_one", c.mu_zero.min_lambda_sin2_plus_one},
         {"max_identity_defect", c.mu_zero.max_identity_defect},
         {"contradiction", c.mu_zero.contradiction}}}};
}

void to_json(json& j, const CheckReport& r) {
  j = {{"check", to_string(r.check)},
       {"tolerance", r.tolerance},
       {"max_residual", r.max_residual},
       {"worst_s", r.worst_s},
       {"worst_theta", r.worst_theta},
       {"points", r.rows.size()},
       {"passed", r.passed},
       {"details", r.details}};
}

}  // namespace revtype
