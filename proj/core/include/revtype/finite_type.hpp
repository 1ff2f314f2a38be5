#pragma once

/**
 * @file finite_type.hpp
 * @brief Testing Delta^III x = A x on a sampled surface of revolution.
 *
 * fit_matrix() fits an unconstrained 3x3 A by least squares over a uniform
 * (s, theta) grid. On a uniform full circle the functions 1, cos theta and
 * sin theta are discretely orthogonal, so every revolution surface yields a
 * fit with a12 = a21 = a13 = a23 = a31 = a32 = 0 and a11 = a22 up to roundoff;
 * structure_check() reports how close the fitted A is to that pattern. What
 * separates finite type surfaces from the rest is the residual.
 */

#include <span>
#include <string>
#include <string_view>

#include "revtype/profile.hpp"

namespace revtype {

enum class Verdict { NullType, SphereType, NotCoordinateFiniteType, Inconclusive };

std::string_view to_string(Verdict v);

/// Residuals at or above this are reported as NotCoordinateFiniteType.
inline constexpr double kNotFiniteTypeResidual = 1e-2;
/// Below this the residual denominator is treated as zero.
inline constexpr double kResidualFloor = 1e-14;

struct StructureDiagnostics {
  double offdiag_max = 0.0;  ///< max |a_ij|, i != j
  double diag_split = 0.0;   ///< |a11 - a22|
  bool passed = false;       ///< both at most tol_struct
};

struct FitReport {
  Mat3 A = Mat3::Zero();
  double rel_residual = 0.0;     ///< sqrt(sum |Dx - Ax|^2) / sqrt(sum |Dx|^2)
  bool residual_is_absolute = false;  ///< denominator fell below kResidualFloor
  double residual_norm = 0.0;    ///< sqrt(sum |Dx - Ax|^2)
  double laplacian_norm = 0.0;   ///< sqrt(sum |Dx|^2)
  double sup_laplacian = 0.0;    ///< max |Dx|
  double sup_position = 0.0;     ///< max |x|
  StructureDiagnostics structure;
  double lambda = 0.0;  ///< (a11 + a22) / 2
  double mu = 0.0;      ///< a33
  Verdict verdict = Verdict::Inconclusive;
  int rank = 0;
  std::size_t points_used = 0;
  GridSpec grid;
  int excluded_declared = 0;
  int excluded_parabolic = 0;
  int excluded_domain = 0;
  std::string diagnostic;
};

/// One grid point: position and Delta^III of the position.
struct FitSample {
  double s = 0.0;
  double theta = 0.0;
  Vec3 x = Vec3::Zero();
  Vec3 lap = Vec3::Zero();
};

/// Samples of every regular grid point, in ring-major order.
std::vector<FitSample> fit_samples(const Grid& grid);

/// Least-squares fit of A to the given samples, with residuals, structure
/// diagnostics and verdict filled in. Grid bookkeeping fields are left at
/// their defaults.
FitReport fit_samples_matrix(std::span<const FitSample> samples, const Tolerances& tol = {});

/// Builds the grid, fits A and classifies. Requires n_theta >= 4. Fewer than
/// nine regular points, or a rank-deficient sample matrix, gives Inconclusive.
FitReport fit_matrix(const ProfileCurve& p, GridSpec spec, const Tolerances& tol = {});

StructureDiagnostics structure_check(const FitReport& report, double tol_struct = Tolerances{}.structure);

/// Verdict from the fitted quantities alone.
Verdict classify(const FitReport& report, const Tolerances& tol = {});

struct ReducedResiduals {
  double coordinate_residual = 0.0;   ///< max |P1 - lambda f|, |P2 - mu g|
  double quotient_residual = 0.0;  ///< max |R - (lambda f sin phi - mu g cos phi)|
  double quotient_slope_residual = 0.0;  ///< max |R' + phi' (lambda f cos phi + mu g sin phi)|
  std::size_t samples = 0;
};

ReducedResiduals reduced_residuals(std::span<const ProfileJets> rings, double lambda, double mu);
/// Throws ParabolicPointError when a sample is parabolic.
ReducedResiduals reduced_residuals(const ProfileCurve& p, double lambda, double mu,
                                   std::span<const double> s_samples, double tol_parab = Tolerances{}.parab);

struct DerivativeRelationCheck {
  double defect = 0.0;          ///< max |R' - (lambda - mu)/2 sin phi cos phi|
  double reduced_system_residual = 0.0;   ///< max(quotient_residual, quotient_slope_residual) at the same samples
  bool applicable = false;      ///< reduced_system_residual <= the applicability tolerance
  std::size_t samples = 0;
};

/// The relation R' = (lambda - mu)/2 sin phi cos phi follows from the reduced
/// system only where that system holds; `applicable` records whether it does
/// (within `applicability_tol`) at the samples.
DerivativeRelationCheck derivative_relation_check(std::span<const ProfileJets> rings, double lambda, double mu,
                     double applicability_tol = Tolerances{}.fit);
DerivativeRelationCheck derivative_relation_check(const ProfileCurve& p, double lambda, double mu, std::span<const double> s_samples,
                     double applicability_tol = Tolerances{}.fit, double tol_parab = Tolerances{}.parab);

}  // namespace revtype
