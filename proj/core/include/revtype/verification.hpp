#pragma once

/// @file verification.hpp
/// @brief Pointwise residual checks over a sampled surface, shared by the CLI
/// and the test suites.
///
/// Each check produces one row per sample. The Laplacian identity, the
/// curvature quotient and the formula comparison have a row per (s, theta);
/// the reduced-system and derivative-relation checks depend on s only and
/// have one row per regular ring with theta = 0.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "revtype/beltrami.hpp"

namespace revtype {

enum class Check { LaplacianIdentity, CurvatureQuotient, FormulaEquivalence, ReducedSystem, DerivativeRelation };

/// Command-line token of each check.
std::string_view to_string(Check c);
/// Throws std::invalid_argument for an unknown name.
Check check_from_string(std::string_view name);

/// Pass threshold used when none is given.
double default_check_tolerance(Check c);

struct CheckRow {
  double s = 0.0;
  double theta = 0.0;
  double value = 0.0;      ///< quantity under test
  double reference = 0.0;  ///< what it is compared against
  double residual = 0.0;
};

struct CheckReport {
  Check check = Check::LaplacianIdentity;
  double tolerance = 0.0;
  double max_residual = 0.0;
  double worst_s = 0.0;
  double worst_theta = 0.0;
  bool passed = false;
  std::vector<CheckRow> rows;
  nlohmann::json details = nlohmann::json::object();  ///< check-specific extras
};

/// |Delta x - (nabla(R, n) - R n)|. value and reference are the norms of the
/// two sides.
CheckReport check_laplacian_identity(const Grid& grid, double tolerance);

/// R = 1/phi' + f/sin phi against (k1 + k2)/(k1 k2) with k1 = h11/g11 and
/// k2 = h22/g22 recomputed from the embedding. Residual is relative to
/// |1/k1| + |1/k2|, so it stays meaningful where R cancels to zero.
CheckReport check_curvature_quotient(const ProfileCurve& p, const Grid& grid, double tolerance);

/// delta3_scalar against delta3_general for one random separable field per
/// grid point. Residual is |a - b| / (1 + |a|).
CheckReport check_formula_equivalence(const Grid& grid, std::uint64_t seed, double tolerance,
                                      double tol_parab = Tolerances{}.parab);

/// Same comparison at `pairs` random (s, theta) points drawn uniformly from
/// the domain; parabolic or excluded draws are redrawn.
CheckReport check_formula_equivalence(const ProfileCurve& p, std::size_t pairs, std::uint64_t seed,
                                      double tolerance, const Tolerances& tol = {});

/// max(coordinate_residual, quotient_residual, quotient_slope_residual) per ring.
CheckReport check_reduced_system(const Grid& grid, double lambda, double mu, double tolerance);

/// |R' - (lambda - mu)/2 sin phi cos phi| per ring; details carry the
/// reduced-system residual and whether the relation applies.
CheckReport check_derivative_relation(const Grid& grid, double lambda, double mu, double tolerance,
                       double applicability_tol = Tolerances{}.fit);

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64& rng);

/// Sum of one to three terms a(s) h(k theta) with a drawn from low-degree
/// polynomials, damped exponentials, sinusoids and the profile's own
/// coordinate and normal components.
ScalarField random_field(std::mt19937_64& rng);

}  // namespace revtype
