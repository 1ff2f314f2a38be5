#include "revtype/beltrami.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "revtype/errors.hpp"

namespace revtype {

namespace {

struct AngularFactor {
  double h, dh, ddh;
};

AngularFactor angular(Harmonic harmonic, int k, double theta) {
  const double kk = static_cast<double>(k);
  switch (harmonic) {
    case Harmonic::Constant: return {1.0, 0.0, 0.0};
    case Harmonic::Cos: return {std::cos(kk * theta), -kk * std::sin(kk * theta), -kk * kk * std::cos(kk * theta)};
    case Harmonic::Sin: return {std::sin(kk * theta), kk * std::cos(kk * theta), -kk * kk * std::sin(kk * theta)};
    case Harmonic::Angle: return {theta, 1.0, 0.0};
  }
  return {0.0, 0.0, 0.0};
}

Jet<2> sin_phi_jet(const ProfileJets& pj) { return sin(pj.phi); }
Jet<2> cos_phi_jet(const ProfileJets& pj) { return cos(pj.phi); }

void require_second_order(const FieldPartials& u) {
  if (!u.has_dss) throw std::invalid_argument("second Beltrami operator needs a field with second s-derivatives");
}

}  // namespace

ScalarField ScalarField::constant(double c) {
  return ScalarField([c](const ProfileJets&) { return Jet<2>(c); }, Harmonic::Constant);
}

ScalarField ScalarField::angle() {
  return ScalarField([](const ProfileJets&) { return Jet<2>(1.0); }, Harmonic::Angle);
}

ScalarField ScalarField::arclength() {
  return ScalarField([](const ProfileJets& pj) { return Jet<2>::variable(pj.s); }, Harmonic::Constant);
}

ScalarField ScalarField::from_expr(Expr a, ParamMap params, Harmonic harmonic, int k) {
  return ScalarField(
      [a = std::move(a), params = std::move(params)](const ProfileJets& pj) {
        return eval_jet3(a, pj.s, params).truncate<2>();
      },
      harmonic, k);
}

FieldPartials ScalarField::at(const ProfileJets& pj, double theta) const {
  FieldPartials out;
  for (const Term& t : terms_) {
    const Jet<2> a = t.radial(pj);
    const AngularFactor h = angular(t.harmonic, t.k, theta);
    out.value += a[0] * h.h;
    out.ds += a[1] * h.h;
    out.dtheta += a[0] * h.dh;
    out.dthetatheta += a[0] * h.ddh;
    if (t.second_order) {
      out.dss += a[2] * h.h;
    } else {
      out.has_dss = false;
    }
  }
  if (!out.has_dss) out.dss = std::numeric_limits<double>::quiet_NaN();
  return out;
}

ScalarField operator+(ScalarField a, const ScalarField& b) {
  a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
  return a;
}

ScalarField operator*(double c, const ScalarField& u) {
  ScalarField out;
  for (const auto& t : u.terms_) {
    ScalarField::Term scaled = t;
    scaled.radial = [c, r = t.radial](const ProfileJets& pj) { return c * r(pj); };
    out.terms_.push_back(std::move(scaled));
  }
  return out;
}

ScalarField coordinate_field(int i) {
  switch (i) {
    case 0: return ScalarField([](const ProfileJets& pj) { return pj.f.truncate<2>(); }, Harmonic::Cos);
    case 1: return ScalarField([](const ProfileJets& pj) { return pj.f.truncate<2>(); }, Harmonic::Sin);
    case 2: return ScalarField([](const ProfileJets& pj) { return pj.g.truncate<2>(); }, Harmonic::Constant);
    default: throw std::out_of_range("coordinate_field: index must be 0, 1 or 2");
  }
}

ScalarField normal_field(int i) {
  switch (i) {
    case 0: return ScalarField([](const ProfileJets& pj) { return -sin_phi_jet(pj); }, Harmonic::Cos);
    case 1: return ScalarField([](const ProfileJets& pj) { return -sin_phi_jet(pj); }, Harmonic::Sin);
    case 2: return ScalarField([](const ProfileJets& pj) { return cos_phi_jet(pj); }, Harmonic::Constant);
    default: throw std::out_of_range("normal_field: index must be 0, 1 or 2");
  }
}

ScalarField curvature_quotient_field() {
  return ScalarField(
      [](const ProfileJets& pj) {
        return Jet<2>({pj.R[0], pj.R[1], std::numeric_limits<double>::quiet_NaN()});
      },
      Harmonic::Constant, 1, /*second_order=*/false);
}

double nabla3(const ProfileJets& pj, double theta, const ScalarField& u, const ScalarField& w) {
  const FieldPartials a = u.at(pj, theta);
  const FieldPartials b = w.at(pj, theta);
  const double dphi = pj.dphi();
  const double sp = pj.sin_phi();
  return a.ds * b.ds / (dphi * dphi) + a.dtheta * b.dtheta / (sp * sp);
}

double nabla3(const ProfileCurve& p, double s, double theta, const ScalarField& u, const ScalarField& w,
              double tol_parab) {
  return nabla3(profile_jets(p, s, tol_parab), theta, u, w);
}

double delta3_scalar(const ProfileJets& pj, double theta, const ScalarField& u) {
  const FieldPartials d = u.at(pj, theta);
  require_second_order(d);
  const double dphi = pj.dphi();
  const double ddphi = pj.ddphi();
  const double sp = pj.sin_phi();
  const double cp = pj.cos_phi();
  return -d.dss / (dphi * dphi) + (ddphi / (dphi * dphi) - cp / sp) * d.ds / dphi -
         d.dthetatheta / (sp * sp);
}

double delta3_scalar(const ProfileCurve& p, double s, double theta, const ScalarField& u, double tol_parab) {
  return delta3_scalar(profile_jets(p, s, tol_parab), theta, u);
}

double delta3_general(const ProfileJets& pj, double theta, const ScalarField& u, double tol_parab) {
  const FieldPartials d = u.at(pj, theta);
  require_second_order(d);

  // Unit tangent (a_f, a_g) of the profile as jets in s.
  const Jet<2> fp = pj.f.derivative();
  const Jet<2> gp = pj.g.derivative();
  const Jet<2> speed = sqrt(fp * fp + gp * gp);
  const Jet<2> a_f = fp / speed;
  const Jet<2> a_g = gp / speed;

  // n = (-a_g cos, -a_g sin, a_f): |n_s|^2 = a_g'^2 + a_f'^2, |n_theta|^2 = a_g^2.
  const Jet<1> daf = a_f.derivative();
  const Jet<1> dag = a_g.derivative();
  const Jet<1> e11 = daf * daf + dag * dag;
  const Jet<1> ag1 = a_g.truncate<1>();
  const Jet<1> e22 = ag1 * ag1;
  const double tol2 = tol_parab * tol_parab;
  if (e11[0] < tol2 || e22[0] < tol2) {
    throw ParabolicPointError(pj.s, std::sqrt(e11[0]), std::sqrt(e22[0]));
  }

  const Jet<1> sqrt_e = sqrt(e11 * e22);
  const Jet<1> c11 = sqrt_e / e11;  // sqrt(e) e^{11}
  const double c22 = sqrt_e[0] / e22[0];  // sqrt(e) e^{22}, theta-independent
  const double divergence = c11[1] * d.ds + c11[0] * d.dss + c22 * d.dthetatheta;
  return -divergence / sqrt_e[0];
}

double delta3_general(const ProfileCurve& p, double s, double theta, const ScalarField& u, double tol_parab) {
  return delta3_general(profile_jets(p, s, tol_parab), theta, u, tol_parab);
}

P1P2 p1_p2(const ProfileJets& pj) {
  const double R = pj.R[0];
  const double dR = pj.R[1];
  const double sp = pj.sin_phi();
  const double cp = pj.cos_phi();
  const double dphi = pj.dphi();
  return {R * sp - cp / dphi * dR, -R * cp - sp / dphi * dR};
}

P1P2 p1_p2(const ProfileCurve& p, double s, double tol_parab) { return p1_p2(profile_jets(p, s, tol_parab)); }

CoordinateLaplacian delta3_coords(const ProfileJets& pj, double theta) {
  const P1P2 pp = p1_p2(pj);
  CoordinateLaplacian out;
  out.P1 = pp.P1;
  out.P2 = pp.P2;
  out.lap = Vec3(pp.P1 * std::cos(theta), pp.P1 * std::sin(theta), pp.P2);
  return out;
}

CoordinateLaplacian delta3_coords(const ProfileCurve& p, double s, double theta, double tol_parab) {
  return delta3_coords(profile_jets(p, s, tol_parab), theta);
}

IdentityResidual verify_laplacian_identity(const Grid& grid) {
  const ScalarField R = curvature_quotient_field();
  const ScalarField n[3] = {normal_field(0), normal_field(1), normal_field(2)};

  IdentityResidual out;
  for (const ProfileJets& pj : grid.rings) {
    for (double theta : grid.thetas) {
      const Vec3 lhs = delta3_coords(pj, theta).lap;
      Vec3 rhs;
      for (int i = 0; i < 3; ++i) {
        rhs[i] = nabla3(pj, theta, R, n[i]) - pj.R[0] * n[i].at(pj, theta).value;
      }
      const double r = (lhs - rhs).norm();
      if (r > out.max_residual || out.points == 0) {
        out.max_residual = std::max(out.max_residual, r);
        out.worst_s = pj.s;
        out.worst_theta = theta;
      }
      ++out.points;
    }
  }
  return out;
}

IdentityResidual verify_laplacian_identity(const ProfileCurve& p, GridSpec spec, const Tolerances& tol) {
  return verify_laplacian_identity(build_grid(p, spec, tol));
}

}  // namespace revtype
