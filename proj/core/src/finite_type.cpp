#include "revtype/finite_type.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/QR>

#include "revtype/beltrami.hpp"
#include "revtype/parallel.hpp"

namespace revtype {

namespace {

constexpr std::size_t kMinFitPoints = 9;

double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NullType: return "NullType";
    case Verdict::SphereType: return "SphereType";
    case Verdict::NotCoordinateFiniteType: return "NotCoordinateFiniteType";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::vector<FitSample> fit_samples(const Grid& grid) {
  const std::size_t nt = grid.thetas.size();
  std::vector<FitSample> out(grid.rings.size() * nt);
  parallel_for(grid.rings.size(), [&](std::size_t i) {
    const ProfileJets& pj = grid.rings[i];
    const P1P2 pp = p1_p2(pj);
    for (std::size_t j = 0; j < nt; ++j) {
      const double th = grid.thetas[j];
      const double c = std::cos(th), sn = std::sin(th);
      FitSample& smp = out[i * nt + j];
      smp.s = pj.s;
      smp.theta = th;
      smp.x = Vec3(pj.f[0] * c, pj.f[0] * sn, pj.g[0]);
      smp.lap = Vec3(pp.P1 * c, pp.P1 * sn, pp.P2);
    }
  });
  return out;
}

StructureDiagnostics structure_check(const FitReport& report, double tol_struct) {
  const Mat3& A = report.A;
  StructureDiagnostics d;
  d.offdiag_max = std::max({std::abs(A(0, 1)), std::abs(A(1, 0)), std::abs(A(0, 2)), std::abs(A(1, 2)),
                            std::abs(A(2, 0)), std::abs(A(2, 1))});
  d.diag_split = std::abs(A(0, 0) - A(1, 1));
  d.passed = d.offdiag_max <= tol_struct && d.diag_split <= tol_struct;
  return d;
}

Verdict classify(const FitReport& r, const Tolerances& tol) {
  if (r.rank < 3 || r.points_used < kMinFitPoints) return Verdict::Inconclusive;
  const double null_ratio = r.sup_position > 0.0 ? r.sup_laplacian / r.sup_position : r.sup_laplacian;
  if (null_ratio <= tol.fit && max_abs(r.A) <= tol.fit) return Verdict::NullType;
  if (max_abs(r.A - 2.0 * Mat3::Identity()) <= tol.fit && r.rel_residual <= tol.fit) return Verdict::SphereType;
  if (r.rel_residual >= kNotFiniteTypeResidual) return Verdict::NotCoordinateFiniteType;
  return Verdict::Inconclusive;
}

FitReport fit_samples_matrix(std::span<const FitSample> samples, const Tolerances& tol) {
  FitReport r;
  r.points_used = samples.size();
  if (samples.size() < kMinFitPoints) {
    r.diagnostic = "fewer than 9 regular grid points";
    return r;
  }

  const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixX3d X(n, 3);
  Eigen::MatrixX3d Y(n, 3);
  for (Eigen::Index k = 0; k < n; ++k) {
    X.row(k) = samples[static_cast<std::size_t>(k)].x.transpose();
    Y.row(k) = samples[static_cast<std::size_t>(k)].lap.transpose();
  }

  // Row i of A solves min |X a_i - Y_i|; the three columns of Y share one
  // factorization of X.
  const Eigen::ColPivHouseholderQR<Eigen::MatrixX3d> qr(X);
  r.rank = static_cast<int>(qr.rank());
  if (r.rank < 3) {
    std::ostringstream os;
    os << "degenerate grid: sample matrix has rank " << r.rank << " < 3";
    r.diagnostic = os.str();
    return r;
  }
  r.A = qr.solve(Y).transpose();

  const Eigen::MatrixX3d residual = Y - X * r.A.transpose();
  r.residual_norm = residual.norm();
  r.laplacian_norm = Y.norm();
  r.sup_laplacian = Y.rowwise().norm().maxCoeff();
  r.sup_position = X.rowwise().norm().maxCoeff();
  if (r.laplacian_norm < kResidualFloor) {
    r.rel_residual = r.residual_norm;
    r.residual_is_absolute = true;
  } else {
    r.rel_residual = r.residual_norm / r.laplacian_norm;
  }

  r.structure = structure_check(r, tol.structure);
  r.lambda = 0.5 * (r.A(0, 0) + r.A(1, 1));
  r.mu = r.A(2, 2);
  r.verdict = classify(r, tol);
  return r;
}

FitReport fit_matrix(const ProfileCurve& p, GridSpec spec, const Tolerances& tol) {
  if (spec.n_theta < 4) throw std::invalid_argument("fit_matrix: n_theta must be >= 4");
  if (spec.n_s < 1) throw std::invalid_argument("fit_matrix: n_s must be >= 1");

  const Grid grid = build_grid(p, spec, tol);
  const std::vector<FitSample> samples = fit_samples(grid);
  FitReport r = fit_samples_matrix(samples, tol);
  r.grid = spec;
  r.excluded_declared = grid.excluded_declared;
  r.excluded_parabolic = grid.excluded_parabolic;
  r.excluded_domain = grid.excluded_domain;
  return r;
}

ReducedResiduals reduced_residuals(std::span<const ProfileJets> rings, double lambda, double mu) {
  ReducedResiduals out;
  for (const ProfileJets& pj : rings) {
    const double f = pj.f[0], g = pj.g[0];
    const double sp = pj.sin_phi(), cp = pj.cos_phi();
    const P1P2 pp = p1_p2(pj);
    out.coordinate_residual = std::max({out.coordinate_residual, std::abs(pp.P1 - lambda * f), std::abs(pp.P2 - mu * g)});
    out.quotient_residual = std::max(out.quotient_residual, std::abs(pj.R[0] - (lambda * f * sp - mu * g * cp)));
    out.quotient_slope_residual = std::max(out.quotient_slope_residual, std::abs(pj.R[1] + pj.dphi() * (lambda * f * cp + mu * g * sp)));
    ++out.samples;
  }
  return out;
}

ReducedResiduals reduced_residuals(const ProfileCurve& p, double lambda, double mu, std::span<const double> s_samples,
                                   double tol_parab) {
  std::vector<ProfileJets> rings;
  rings.reserve(s_samples.size());
  for (double s : s_samples) rings.push_back(profile_jets(p, s, tol_parab));
  return reduced_residuals(rings, lambda, mu);
}

DerivativeRelationCheck derivative_relation_check(std::span<const ProfileJets> rings, double lambda, double mu, double applicability_tol) {
  DerivativeRelationCheck out;
  const ReducedResiduals red = reduced_residuals(rings, lambda, mu);
  out.reduced_system_residual = std::max(red.quotient_residual, red.quotient_slope_residual);
  for (const ProfileJets& pj : rings) {
    const double rhs = 0.5 * (lambda - mu) * pj.sin_phi() * pj.cos_phi();
    out.defect = std::max(out.defect, std::abs(pj.R[1] - rhs));
    ++out.samples;
  }
  out.applicable = out.reduced_system_residual <= applicability_tol;
  return out;
}

DerivativeRelationCheck derivative_relation_check(const ProfileCurve& p, double lambda, double mu, std::span<const double> s_samples,
                     double applicability_tol, double tol_parab) {
  std::vector<ProfileJets> rings;
  rings.reserve(s_samples.size());
  for (double s : s_samples) rings.push_back(profile_jets(p, s, tol_parab));
  return derivative_relation_check(rings, lambda, mu, applicability_tol);
}

}  // namespace revtype
