#pragma once

/**
 * @file case2.hpp
 * @brief Coefficient algebra of the lambda != mu branch of Delta^III x = A x
 * on surfaces of revolution, and a scan certifying that its final quartic in
 * sin(phi) has no identically vanishing coefficient set off the diagonal.
 *
 * With s = sin(phi), c = cos(phi):
 *
 *   a  = lambda s + (lambda + mu) / ((lambda - mu) s)
 *   b  = 2 mu / ((lambda - mu) c) - mu c
 *   a1 = lambda (lambda-mu)^2 s^4 + (lambda-mu)(lambda mu - lambda^2 + 3 lambda + mu) s^2
 *        - (lambda+mu)(3 lambda - mu)
 *   b1 = mu [ (lambda-mu)^2 s^4 + (lambda-mu)(mu - lambda + 4) s^2 - 2 (lambda+mu) ]
 *   Q  = c4 s^4 + c2 s^2 + c0 with
 *        c4 = lambda (lambda-mu)^2
 *        c2 = (lambda-mu)(lambda mu - lambda^2 + 5 lambda + mu - 2)
 *        c0 = (lambda+mu)(mu - 3 lambda + 4)
 *
 * a f + b g = 0 and a1 f/s + b1 g/c = 0 have a nonzero solution (f, g) iff
 * D = a b1 / c - b a1 / s vanishes. Clearing the denominators gives
 * D s c = mu Q identically.
 */

#include <optional>
#include <span>
#include <vector>

namespace revtype {

struct QuarticCoefficients {
  double c4 = 0.0;
  double c2 = 0.0;
  double c0 = 0.0;

  double max_abs() const;
  double value(double sin_phi) const;
};

QuarticCoefficients quartic_coefficients(double lambda, double mu);

struct Case2Coefficients {
  double a = 0.0;
  double b = 0.0;
  double a1 = 0.0;
  double b1 = 0.0;
  QuarticCoefficients poly;
};

/// Requires lambda != mu and sin(phi) cos(phi) != 0; throws std::domain_error
/// otherwise.
Case2Coefficients case2_coefficients(double lambda, double mu, double sin_phi, double cos_phi);

/// cos(phi) taken as +sqrt(1 - sin^2 phi); sin_phi must lie in (0, 1).
Case2Coefficients case2_coefficients(double lambda, double mu, double sin_phi);

/// D = a b1 / cos(phi) - b a1 / sin(phi).
double elimination_determinant(double lambda, double mu, double phi);

/// Proportionality factor between D sin(phi) cos(phi) and Q.
inline double elimination_factor(double /*lambda*/, double mu) { return mu; }

struct EliminationCheck {
  double factor = 0.0;              ///< mu
  double max_zero_set_discrepancy = 0.0;  ///< max |D s c - mu Q| / (1 + |mu Q|)
  double ratio_min = 0.0;           ///< min of D s c / Q where Q != 0
  double ratio_max = 0.0;
  double ratio_spread = 0.0;        ///< (ratio_max - ratio_min) / max(1, |factor|)
  bool zero_sets_match = false;     ///< sign(D) changes exactly where sign(mu Q) does
  std::size_t samples = 0;
};

/// Requires lambda != mu and mu != 0 (for mu = 0 both b and b1 vanish and D is
/// identically zero); throws std::domain_error otherwise or when a sample has
/// sin(phi) cos(phi) = 0.
EliminationCheck elimination_check(double lambda, double mu, std::span<const double> phis);

struct Case2ScanConfig {
  double lambda_min = -10.0;
  double lambda_max = 10.0;
  double mu_min = -10.0;
  double mu_max = 10.0;
  double step = 0.25;
  double threshold = 0.1;  ///< certificate requires the scan minimum above this
  int max_depth = 12;      ///< bisection depth for per-cell bounds
};

struct ScanArgmin {
  double lambda = 0.0;
  double mu = 0.0;
  QuarticCoefficients coeffs;
};

/// Interval bound over the cells of the scan: each cell [l +- h/2] x [m +- h/2]
/// not lying in the band |lambda - mu| < h/2 is bisected until the interval
/// enclosure of one coefficient excludes zero.
struct CellBound {
  std::size_t cells = 0;
  std::size_t certified_leaves = 0;
  std::size_t uncertified_leaves = 0;
  double min_lower_bound = 0.0;  ///< min over certified leaves
  double band_halfwidth = 0.0;
  std::vector<ScanArgmin> uncertified;  ///< leaf centres, first 16 only
};

/// The mu = 0 exclusion. There a = (lambda sin^2 phi + 1) / sin phi and
/// b = 0; c4 = 0 forces lambda = 0, where lambda sin^2 phi + 1 = 1.
struct MuZeroCheck {
  double lambda_from_c4 = 0.0;
  double min_lambda_sin2_plus_one = 0.0;  ///< over sin phi in (0, 1) at lambda_from_c4
  double max_identity_defect = 0.0;       ///< max |a sin phi - (lambda sin^2 phi + 1)| + |b| checks
  bool contradiction = false;
};

struct Case2Certificate {
  Case2ScanConfig config;
  std::size_t points_scanned = 0;
  std::size_t points_skipped_diagonal = 0;
  std::optional<double> min_max_abs_coeff;
  std::optional<ScanArgmin> argmin;
  bool bounded_away_from_zero = false;
  CellBound cells;
  MuZeroCheck mu_zero;
};

/// Scan abscissae lo, lo + step, ... up to hi (inclusive within roundoff).
std::vector<double> case2_axis(double lo, double hi, double step);

/// Throws std::invalid_argument for an empty range or a nonpositive step.
Case2Certificate case2_scan(const Case2ScanConfig& config);

}  // namespace revtype
