#pragma once

/**
 * @file profile.hpp
 * @brief Arclength-parametrized profile curves r(s) = (f(s), 0, g(s)) and the
 * surface of revolution x(s, theta) = (f cos theta, f sin theta, g) they sweep
 * about the x3-axis.
 *
 * The tangent angle phi is defined by f' = cos phi, g' = sin phi. Everything
 * the rest of the library needs about the surface at a parameter value s is
 * bundled in ProfileJets: jets of f and g, the jet (phi, phi', phi'') and the
 * jet (R, R') of the curvature quotient R = 2H/K = 1/phi' + f/sin phi.
 */

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "revtype/expression.hpp"
#include "revtype/jet.hpp"

namespace revtype {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo < x && x < hi; }
  double width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Tolerances shared by validation, sampling and classification.
struct Tolerances {
  double arc = 1e-8;         ///< max |f'^2 + g'^2 - 1|
  double parab = 1e-3;       ///< min |phi'| and |sin phi| at a regular point
  double fit = 1e-6;         ///< verdict threshold for A and the fit residual
  double structure = 1e-8;   ///< off-diagonal / diagonal-split threshold of A
};

class ProfileCurve {
 public:
  ProfileCurve(std::string name, Expr f, Expr g, Interval domain, ParamMap params = {},
               std::vector<Interval> excluded = {});

  /// Parses f and g with the keys of `params` accepted as parameter names.
  static ProfileCurve from_text(std::string name, std::string_view f, std::string_view g,
                                Interval domain, ParamMap params = {},
                                std::vector<Interval> excluded = {});

  const std::string& name() const { return name_; }
  const Expr& f() const { return f_; }
  const Expr& g() const { return g_; }
  const Interval& domain() const { return domain_; }
  const ParamMap& params() const { return params_; }
  const std::vector<Interval>& excluded() const { return excluded_; }

  /// True when s falls inside one of the declared excluded intervals.
  bool is_excluded(double s) const;

  Jet3 f_jet(double s) const { return eval_jet3(f_, s, params_); }
  Jet3 g_jet(double s) const { return eval_jet3(g_, s, params_); }

 private:
  std::string name_;
  Expr f_;
  Expr g_;
  Interval domain_;
  ParamMap params_;
  std::vector<Interval> excluded_;
};

/// Cell-centred uniform samples: lo + (i + 1/2) (hi - lo) / n, i = 0..n-1.
std::vector<double> uniform_samples(const Interval& domain, int n);

/// Uniform full-circle angles 2 pi j / n, j = 0..n-1.
std::vector<double> uniform_angles(int n);

struct ValidationReport {
  int samples = 0;
  double max_arc_defect = 0.0;     ///< max |f'^2 + g'^2 - 1|
  double min_f = 0.0;
  double min_abs_fg_prime = 0.0;   ///< min |f' g'| over regular samples
  double max_abs_fg_prime = 0.0;   ///< max |f' g'|; ~0 means cylinder or plane
  double min_parabolic_measure = 0.0;  ///< min over regular samples of min(|phi'|, |sin phi|)
  int excluded_declared = 0;
  int excluded_parabolic = 0;
  bool passed = false;
  std::vector<std::string> issues;
};

/// Checks the arclength identity, f > 0 and non-degeneracy on n_samples
/// uniform samples of the domain. Throws DomainError (with the sample s) when
/// an expression cannot be evaluated at a sample.
ValidationReport validate_profile(const ProfileCurve& p, int n_samples, const Tolerances& tol = {});

/// (phi, phi', phi'') at s. phi = atan2(g', f') on the branch obtained by
/// continuous tracking from the left end of the domain; phi' = f'g'' - g'f''
/// and phi'' = f'g''' - g'f'''. Throws ProfileError if f' = g' = 0.
Jet<2> phi_jet(const ProfileCurve& p, double s);

/// Everything known about the profile at one parameter value.
struct ProfileJets {
  double s = 0.0;
  Jet3 f;
  Jet3 g;
  Jet<2> phi;  ///< (phi, phi', phi'')
  Jet<1> R;    ///< (R, R'), R = 2H/K

  double sin_phi() const { return std::sin(phi[0]); }
  double cos_phi() const { return std::cos(phi[0]); }
  double dphi() const { return phi[1]; }
  double ddphi() const { return phi[2]; }
};

/// Builds the bundle at s. Throws ParabolicPointError when |phi'| or
/// |sin phi| is below tol_parab, DomainError when an expression fails.
ProfileJets profile_jets(const ProfileCurve& p, double s, double tol_parab = Tolerances{}.parab);

struct FormsAndCurvature {
  double g11 = 0, g22 = 0;
  double h11 = 0, h22 = 0;
  double e11 = 0, e22 = 0;
  double H = 0, K = 0, R = 0;
  double phi = 0, dphi = 0, ddphi = 0;

  double e() const { return e11 * e22; }
  double e_inv11() const { return 1.0 / e11; }
  double e_inv22() const { return 1.0 / e22; }
};

FormsAndCurvature forms_at(const ProfileJets& pj);
FormsAndCurvature forms_at(const ProfileCurve& p, double s, double tol_parab = Tolerances{}.parab);

struct SurfacePoint {
  double s = 0.0;
  double theta = 0.0;  ///< reduced to [0, 2 pi)
  Vec3 x = Vec3::Zero();
  Vec3 n = Vec3::Zero();
};

SurfacePoint point_at(const ProfileCurve& p, double s, double theta);

/// Fundamental forms recomputed from the embedding alone: tangents x_s, x_theta,
/// the normalised cross-product normal, x_ss . n, x_thetatheta . n, and the
/// Gauss-map pullback |n_s|^2, n_s . n_theta, |n_theta|^2. No use of phi.
struct EmbeddingForms {
  double g11 = 0, g12 = 0, g22 = 0;
  double h11 = 0, h12 = 0, h22 = 0;
  double e11 = 0, e12 = 0, e22 = 0;
  Vec3 n = Vec3::Zero();
  Vec3 x_s = Vec3::Zero();
  Vec3 x_theta = Vec3::Zero();

  double kappa1() const { return h11 / g11; }
  double kappa2() const { return h22 / g22; }
};

EmbeddingForms embedding_forms(const ProfileCurve& p, double s, double theta);

struct GridSpec {
  int n_s = 32;
  int n_theta = 32;
};

/// Regular rings of a uniform (s, theta) grid. Samples in declared excluded
/// intervals, at parabolic points or where an expression fails are skipped
/// and counted.
struct Grid {
  std::vector<ProfileJets> rings;
  std::vector<double> thetas;
  int requested_s = 0;
  int excluded_declared = 0;
  int excluded_parabolic = 0;
  int excluded_domain = 0;

  std::size_t point_count() const { return rings.size() * thetas.size(); }
};

Grid build_grid(const ProfileCurve& p, GridSpec spec, const Tolerances& tol = {});

}  // namespace revtype
