// Acceptance gate: one [PASS]/[FAIL] line per criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <revtype/case2.hpp>
#include <revtype/catalog.hpp>
#include <revtype/finite_type.hpp>
#include <revtype/verification.hpp>

#include "random_expr.hpp"

using namespace revtype;

namespace {

constexpr GridSpec kGrid{32, 32};
// Dense least-squares fit of the torus (3, 1) on the 32 x 32 cell-centred grid.
constexpr double kTorusRelResidual = 0.9061926879548688;
// Scan minimum of max(|c4|, |c2|, |c0|), attained at (lambda, mu) = (0.5, -0.5).
constexpr double kCase2ScanMinimum = 0.5;

double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<CatalogEntry> catalog_surfaces() {
  return {sphere(0.5), sphere(1), sphere(2), sphere(5), catenoid(1), catenoid(2), torus(3, 1)};
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome sphere_reproduction() {
  double worst_a = 0, worst_rel = 0;
  bool verdicts = true;
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    const FitReport f = fit_matrix(sphere(r).profile, kGrid);
    worst_a = std::max(worst_a, max_abs(f.A - 2 * Mat3::Identity()));
    worst_rel = std::max(worst_rel, f.rel_residual);
    verdicts = verdicts && f.verdict == Verdict::SphereType;
  }
  std::ostringstream os;
  os << "max |A-2I| = " << worst_a << ", max rel_residual = " << worst_rel;
  return {worst_a <= 1e-6 && worst_rel <= 1e-6 && verdicts, os.str()};
}

Outcome catenoid_reproduction() {
  double worst_ratio = 0, worst_a = 0;
  bool verdicts = true;
  for (double c : {1.0, 2.0}) {
    const FitReport f = fit_matrix(catenoid(c).profile, kGrid);
    worst_ratio = std::max(worst_ratio, f.sup_laplacian / f.sup_position);
    worst_a = std::max(worst_a, max_abs(f.A));
    verdicts = verdicts && f.verdict == Verdict::NullType;
  }
  std::ostringstream os;
  os << "max sup|Dx|/sup|x| = " << worst_ratio << ", max |A| = " << worst_a;
  return {worst_ratio <= 1e-8 && worst_a <= 1e-6 && verdicts, os.str()};
}

Outcome negative_control() {
  const FitReport f = fit_matrix(torus(3, 1).profile, kGrid);
  std::ostringstream os;
  os << "rel_residual = " << f.rel_residual << " (reference " << kTorusRelResidual << "), verdict "
     << to_string(f.verdict);
  return {f.rel_residual >= 1e-2 && std::abs(f.rel_residual - kTorusRelResidual) <= 1e-9 &&
              f.verdict == Verdict::NotCoordinateFiniteType,
          os.str()};
}

Outcome laplacian_identity() {
  double worst = 0;
  for (const auto& e : catalog_surfaces()) {
    worst = std::max(worst, check_laplacian_identity(build_grid(e.profile, kGrid), 1e-8).max_residual);
  }
  std::ostringstream os;
  os << "max residual = " << worst;
  return {worst <= 1e-8, os.str()};
}

Outcome formula_equivalence() {
  double worst = 0;
  std::size_t pairs = 0;
  for (const auto& e : catalog_surfaces()) {
    const CheckReport r = check_formula_equivalence(e.profile, 1000, 2024, 1e-8);
    worst = std::max(worst, r.max_residual);
    pairs += r.rows.size();
  }
  std::ostringstream os;
  os << pairs << " pairs, max relative difference = " << worst;
  return {worst <= 1e-8 && pairs == 1000 * catalog_surfaces().size(), os.str()};
}

Outcome curvature_quotient() {
  double worst = 0;
  for (const auto& e : catalog_surfaces()) {
    worst = std::max(worst, check_curvature_quotient(e.profile, build_grid(e.profile, kGrid), 1e-10).max_residual);
  }
  std::ostringstream os;
  os << "max relative residual = " << worst;
  return {worst <= 1e-10, os.str()};
}

Outcome structure_invariance() {
  double off = 0, split = 0;
  for (const auto& e : catalog_surfaces()) {
    for (int nt : {4, 7, 32}) {
      const FitReport f = fit_matrix(e.profile, {32, nt});
      off = std::max(off, f.structure.offdiag_max);
      split = std::max(split, f.structure.diag_split);
    }
  }
  std::ostringstream os;
  os << "max offdiag = " << off << ", max |a11-a22| = " << split;
  return {off <= 1e-8 && split <= 1e-8, os.str()};
}

Outcome case2_certificate() {
  const Case2Certificate c = case2_scan({});
  const QuarticCoefficients a = quartic_coefficients(0, 2), b = quartic_coefficients(0, -4);
  const double m = c.min_max_abs_coeff.value_or(0.0);
  std::ostringstream os;
  os << c.points_scanned << " points, min max|c| = " << m << " at (" << c.argmin->lambda << ", " << c.argmin->mu
     << "), " << c.cells.uncertified_leaves << " uncertified cells, c0(0,2) = " << a.c0 << ", c2(0,-4) = " << b.c2;
  return {c.bounded_away_from_zero && m == kCase2ScanMinimum && c.cells.uncertified_leaves == 0 &&
              c.mu_zero.contradiction && a.c0 == 12.0 && b.c2 == -24.0,
          os.str()};
}

Outcome jet_correctness() {
  std::mt19937_64 rng(2024);
  constexpr double kH = 1e-5;
  const double tols[3] = {1e-6, 1e-4, 1e-4};
  double worst[3] = {0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    const testing::JetSample smp = testing::draw_jet_sample(rng, 5, kH);
    for (int k = 0; k < 3; ++k) {
      const double a = smp.jet[k + 1];
      worst[k] = std::max(worst[k], std::abs(a - smp.fd[k]) / (1 + std::abs(a)));
    }
  }
  std::ostringstream os;
  os << "1000 expressions, max relative error d1 = " << worst[0] << ", d2 = " << worst[1] << ", d3 = " << worst[2];
  return {worst[0] <= tols[0] && worst[1] <= tols[1] && worst[2] <= tols[2], os.str()};
}

Outcome arclength_validation() {
  double worst = 0;
  bool passed = true;
  for (const auto& e : catalog_surfaces()) {
    const ValidationReport v = validate_profile(e.profile, 1001);
    worst = std::max(worst, v.max_arc_defect);
    passed = passed && v.passed;
  }
  const ValidationReport broken = validate_profile(broken_diagonal().profile, 1001);
  std::ostringstream os;
  os << "catalog max defect = " << worst << ", broken profile defect = " << broken.max_arc_defect
     << (broken.passed ? " (accepted)" : " (rejected)");
  return {passed && worst <= 1e-10 && !broken.passed && std::abs(broken.max_arc_defect - 1.0) <= 1e-12, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"sphere reproduction", sphere_reproduction},
      {"catenoid reproduction", catenoid_reproduction},
      {"torus negative control", negative_control},
      {"Laplacian identity", laplacian_identity},
      {"formula equivalence", formula_equivalence},
      {"curvature quotient consistency", curvature_quotient},
      {"structure invariance", structure_invariance},
      {"lambda != mu contradiction certificate", case2_certificate},
      {"jet correctness", jet_correctness},
      {"arclength validation", arclength_validation},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s: %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
