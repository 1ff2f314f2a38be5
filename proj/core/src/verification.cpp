#include "revtype/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "revtype/errors.hpp"
#include "revtype/finite_type.hpp"

namespace revtype {

namespace {

void record(CheckReport& r, const CheckRow& row) {
  if (r.rows.empty() || row.residual > r.max_residual) {
    r.max_residual = std::max(r.max_residual, row.residual);
    r.worst_s = row.s;
    r.worst_theta = row.theta;
  }
  r.rows.push_back(row);
}

void finish(CheckReport& r) { r.passed = !r.rows.empty() && r.max_residual <= r.tolerance; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

ScalarField::Radial random_radial(std::mt19937_64& rng) {
  switch (rng() % 5) {
    case 0: {
      const double c0 = uniform(rng, -1, 1), c1 = uniform(rng, -1, 1), c2 = uniform(rng, -1, 1);
      return [=](const ProfileJets& pj) {
        const Jet<2> s = Jet<2>::variable(pj.s);
        return c0 + c1 * s + c2 * s * s;
      };
    }
    case 1: {
      const double amp = uniform(rng, -1, 1), beta = uniform(rng, -0.5, 0.5);
      return [=](const ProfileJets& pj) { return amp * exp(beta * Jet<2>::variable(pj.s)); };
    }
    case 2: {
      const double amp = uniform(rng, -1, 1), omega = uniform(rng, 0.5, 2.0), psi = uniform(rng, 0, 2 * std::numbers::pi);
      return [=](const ProfileJets& pj) { return amp * sin(omega * Jet<2>::variable(pj.s) + psi); };
    }
    case 3: {
      const double amp = uniform(rng, -1, 1);
      const bool use_f = rng() % 2 == 0;
      return [=](const ProfileJets& pj) { return amp * (use_f ? pj.f : pj.g).truncate<2>(); };
    }
    default: {
      const double amp = uniform(rng, -1, 1);
      const bool use_sin = rng() % 2 == 0;
      return [=](const ProfileJets& pj) { return amp * (use_sin ? sin(pj.phi) : cos(pj.phi)); };
    }
  }
}

CheckRow compare_formulas(const ProfileJets& pj, double theta, const ScalarField& u, double tol_parab) {
  CheckRow row;
  row.s = pj.s;
  row.theta = theta;
  row.value = delta3_scalar(pj, theta, u);
  row.reference = delta3_general(pj, theta, u, tol_parab);
  row.residual = std::abs(row.value - row.reference) / (1.0 + std::abs(row.value));
  return row;
}

}  // namespace

std::string_view to_string(Check c) {
  switch (c) {
    case Check::LaplacianIdentity: return "laplacian-identity";
    case Check::CurvatureQuotient: return "curvature-quotient";
    case Check::FormulaEquivalence: return "formula-equivalence";
    case Check::ReducedSystem: return "reduced-system";
    case Check::DerivativeRelation: return "derivative-relation";
  }
  return "laplacian-identity";
}

Check check_from_string(std::string_view name) {
  for (Check c : {Check::LaplacianIdentity, Check::CurvatureQuotient, Check::FormulaEquivalence, Check::ReducedSystem, Check::DerivativeRelation}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

double default_check_tolerance(Check c) {
  switch (c) {
    case Check::LaplacianIdentity: return 1e-8;
    case Check::CurvatureQuotient: return 1e-10;
    case Check::FormulaEquivalence: return 1e-8;
    case Check::ReducedSystem: return 1e-8;
    case Check::DerivativeRelation: return 1e-10;
  }
  return 1e-8;
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

ScalarField random_field(std::mt19937_64& rng) {
  ScalarField u;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    ScalarField::Radial radial = random_radial(rng);
    Harmonic h = Harmonic::Constant;
    switch (rng() % 3) {
      case 0: h = Harmonic::Constant; break;
      case 1: h = Harmonic::Cos; break;
      default: h = Harmonic::Sin; break;
    }
    const int k = 1 + static_cast<int>(rng() % 3);
    u = u + ScalarField(std::move(radial), h, k);
  }
  return u;
}

CheckReport check_laplacian_identity(const Grid& grid, double tolerance) {
  const ScalarField R = curvature_quotient_field();
  const ScalarField n[3] = {normal_field(0), normal_field(1), normal_field(2)};
  CheckReport r;
  r.check = Check::LaplacianIdentity;
  r.tolerance = tolerance;
  for (const ProfileJets& pj : grid.rings) {
    for (double theta : grid.thetas) {
      const Vec3 lhs = delta3_coords(pj, theta).lap;
      Vec3 rhs;
      for (int i = 0; i < 3; ++i) rhs[i] = nabla3(pj, theta, R, n[i]) - pj.R[0] * n[i].at(pj, theta).value;
      record(r, {pj.s, theta, lhs.norm(), rhs.norm(), (lhs - rhs).norm()});
    }
  }
  finish(r);
  return r;
}

CheckReport check_curvature_quotient(const ProfileCurve& p, const Grid& grid, double tolerance) {
  CheckReport r;
  r.check = Check::CurvatureQuotient;
  r.tolerance = tolerance;
  for (const ProfileJets& pj : grid.rings) {
    const double value = forms_at(pj).R;
    for (double theta : grid.thetas) {
      const EmbeddingForms ef = embedding_forms(p, pj.s, theta);
      const double k1 = ef.kappa1(), k2 = ef.kappa2();
      const double reference = (k1 + k2) / (k1 * k2);
      const double scale = std::max(std::abs(1.0 / k1) + std::abs(1.0 / k2), 1e-300);
      record(r, {pj.s, theta, value, reference, std::abs(value - reference) / scale});
    }
  }
  finish(r);
  return r;
}

CheckReport check_formula_equivalence(const Grid& grid, std::uint64_t seed, double tolerance, double tol_parab) {
  std::mt19937_64 rng(seed);
  CheckReport r;
  r.check = Check::FormulaEquivalence;
  r.tolerance = tolerance;
  for (const ProfileJets& pj : grid.rings) {
    for (double theta : grid.thetas) record(r, compare_formulas(pj, theta, random_field(rng), tol_parab));
  }
  r.details["seed"] = seed;
  finish(r);
  return r;
}

CheckReport check_formula_equivalence(const ProfileCurve& p, std::size_t pairs, std::uint64_t seed,
                                      double tolerance, const Tolerances& tol) {
  std::mt19937_64 rng(seed);
  CheckReport r;
  r.check = Check::FormulaEquivalence;
  r.tolerance = tolerance;
  const Interval J = p.domain();
  std::size_t redraws = 0;
  while (r.rows.size() < pairs) {
    const double s = uniform(rng, J.lo, J.hi);
    const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const ScalarField u = random_field(rng);
    if (s <= J.lo || p.is_excluded(s)) {
      ++redraws;
      continue;
    }
    try {
      record(r, compare_formulas(profile_jets(p, s, tol.parab), theta, u, tol.parab));
    } catch (const ParabolicPointError&) {
      ++redraws;
    }
    if (redraws > 100 * pairs) throw ProfileError("check_formula_equivalence: too few regular points in the domain");
  }
  r.details["seed"] = seed;
  r.details["redraws"] = redraws;
  finish(r);
  return r;
}

CheckReport check_reduced_system(const Grid& grid, double lambda, double mu, double tolerance) {
  CheckReport r;
  r.check = Check::ReducedSystem;
  r.tolerance = tolerance;
  for (const ProfileJets& pj : grid.rings) {
    const ReducedResiduals red = reduced_residuals(std::span<const ProfileJets>(&pj, 1), lambda, mu);
    const double expected_R = lambda * pj.f[0] * pj.sin_phi() - mu * pj.g[0] * pj.cos_phi();
    record(r, {pj.s, 0.0, pj.R[0], expected_R, std::max({red.coordinate_residual, red.quotient_residual, red.quotient_slope_residual})});
  }
  const ReducedResiduals all = reduced_residuals(grid.rings, lambda, mu);
  r.details = {{"lambda", lambda}, {"mu", mu}, {"coordinate_residual", all.coordinate_residual}, {"quotient_residual", all.quotient_residual}, {"quotient_slope_residual", all.quotient_slope_residual}};
  finish(r);
  return r;
}

CheckReport check_derivative_relation(const Grid& grid, double lambda, double mu, double tolerance, double applicability_tol) {
  CheckReport r;
  r.check = Check::DerivativeRelation;
  r.tolerance = tolerance;
  for (const ProfileJets& pj : grid.rings) {
    const double rhs = 0.5 * (lambda - mu) * pj.sin_phi() * pj.cos_phi();
    record(r, {pj.s, 0.0, pj.R[1], rhs, std::abs(pj.R[1] - rhs)});
  }
  const DerivativeRelationCheck summary = derivative_relation_check(grid.rings, lambda, mu, applicability_tol);
  r.details = {{"lambda", lambda},
               {"mu", mu},
               {"reduced_system_residual", summary.reduced_system_residual},
               {"applicable", summary.applicable},
               {"applicability_tolerance", applicability_tol}};
  finish(r);
  return r;
}

}  // namespace revtype
