#pragma once

/**
 * @file beltrami.hpp
 * @brief First and second Beltrami operators of the third fundamental form
 * III = e_ij du^i du^j on a surface of revolution.
 *
 * With e11 = phi'^2, e22 = sin^2 phi, e12 = 0:
 *
 *   nabla(u, w) = u_s w_s / phi'^2 + u_theta w_theta / sin^2 phi
 *   Delta u     = -u_ss / phi'^2 + (phi''/phi'^2 - cot phi) u_s / phi'
 *                 - u_thetatheta / sin^2 phi
 *
 * Delta uses the sign convention Delta = -(d^2/dx^2 + d^2/dy^2) on the flat
 * model. delta3_general() evaluates the divergence form
 * -(1/sqrt e) (sqrt e e^{ij} u_i)_j from Gauss-map data instead; it is kept
 * as an independent check of delta3_scalar().
 */

#include <functional>
#include <vector>

#include "revtype/profile.hpp"

namespace revtype {

/// Angular factor of a separable field term a(s) h(theta).
enum class Harmonic {
  Constant,  ///< h = 1
  Cos,       ///< h = cos(k theta)
  Sin,       ///< h = sin(k theta)
  Angle,     ///< h = theta (the coordinate function; not periodic)
};

struct FieldPartials {
  double value = 0.0;
  double ds = 0.0;
  double dss = 0.0;
  double dtheta = 0.0;
  double dthetatheta = 0.0;
  bool has_dss = true;
};

/// Finite sum of separable terms a(s) h(theta). The radial factor receives the
/// profile bundle at s so that profile-derived fields (coordinates, normal,
/// R) reuse the jets already computed there.
class ScalarField {
 public:
  using Radial = std::function<Jet<2>(const ProfileJets&)>;

  struct Term {
    Radial radial;
    Harmonic harmonic = Harmonic::Constant;
    int k = 1;
    bool second_order = true;  ///< false when the radial jet lacks a''
  };

  ScalarField() = default;
  explicit ScalarField(Term term) { terms_.push_back(std::move(term)); }
  ScalarField(Radial radial, Harmonic harmonic, int k = 1, bool second_order = true)
      : ScalarField(Term{std::move(radial), harmonic, k, second_order}) {}

  static ScalarField constant(double c);
  /// u = theta.
  static ScalarField angle();
  /// u = s.
  static ScalarField arclength();
  /// a(s) h(theta) with a given by an expression in s.
  static ScalarField from_expr(Expr a, ParamMap params = {}, Harmonic harmonic = Harmonic::Constant, int k = 1);

  FieldPartials at(const ProfileJets& pj, double theta) const;

  const std::vector<Term>& terms() const { return terms_; }

  friend ScalarField operator+(ScalarField a, const ScalarField& b);
  friend ScalarField operator*(double c, const ScalarField& u);

 private:
  std::vector<Term> terms_;
};

/// x_i, i = 0, 1, 2: f cos theta, f sin theta, g.
ScalarField coordinate_field(int i);
/// n_i: -sin phi cos theta, -sin phi sin theta, cos phi.
ScalarField normal_field(int i);
/// R = 2H/K. Only first derivatives are available.
ScalarField curvature_quotient_field();

double nabla3(const ProfileJets& pj, double theta, const ScalarField& u, const ScalarField& w);
double nabla3(const ProfileCurve& p, double s, double theta, const ScalarField& u, const ScalarField& w,
              double tol_parab = Tolerances{}.parab);

double delta3_scalar(const ProfileJets& pj, double theta, const ScalarField& u);
double delta3_scalar(const ProfileCurve& p, double s, double theta, const ScalarField& u,
                     double tol_parab = Tolerances{}.parab);

/// Divergence-form Delta^III from e11 = |n_s|^2, e22 = |n_theta|^2 and their
/// s-derivatives, with n built from the unit tangent (f', g') / |r'|.
double delta3_general(const ProfileJets& pj, double theta, const ScalarField& u, double tol_parab = Tolerances{}.parab);
double delta3_general(const ProfileCurve& p, double s, double theta, const ScalarField& u,
                      double tol_parab = Tolerances{}.parab);

struct P1P2 {
  double P1 = 0.0;
  double P2 = 0.0;
};

/// P1 = R sin phi - (cos phi / phi') R',  P2 = -R cos phi - (sin phi / phi') R'.
P1P2 p1_p2(const ProfileJets& pj);
P1P2 p1_p2(const ProfileCurve& p, double s, double tol_parab = Tolerances{}.parab);

struct CoordinateLaplacian {
  double P1 = 0.0;
  double P2 = 0.0;
  Vec3 lap = Vec3::Zero();  ///< (P1 cos theta, P1 sin theta, P2)
};

CoordinateLaplacian delta3_coords(const ProfileJets& pj, double theta);
CoordinateLaplacian delta3_coords(const ProfileCurve& p, double s, double theta,
                                  double tol_parab = Tolerances{}.parab);

struct IdentityResidual {
  double max_residual = 0.0;
  double worst_s = 0.0;
  double worst_theta = 0.0;
  std::size_t points = 0;
};

/// Max over the grid of |Delta x - (nabla(R, n) - R n)|, the left side from
/// delta3_coords and the right side from nabla3 on the normal components.
IdentityResidual verify_laplacian_identity(const Grid& grid);
IdentityResidual verify_laplacian_identity(const ProfileCurve& p, GridSpec spec, const Tolerances& tol = {});

}  // namespace revtype
