#include "revtype/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include <Eigen/Geometry>

#include "revtype/errors.hpp"
#include "revtype/parallel.hpp"

namespace revtype {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Steps used when walking the phi branch from the anchor to s.
constexpr int kBranchStepsPerDomain = 128;

struct TangentJets {
  Jet3 f;
  Jet3 g;
};

TangentJets tangent_jets(const ProfileCurve& p, double s) { return {p.f_jet(s), p.g_jet(s)}; }

double principal_phi(const TangentJets& t, double s) {
  if (t.f[1] == 0.0 && t.g[1] == 0.0) {
    throw ProfileError("corrupted profile: f' = g' = 0 at s=" + std::to_string(s));
  }
  return std::atan2(t.g[1], t.f[1]);
}

double phi_prime(const TangentJets& t) { return t.f[1] * t.g[2] - t.g[1] * t.f[2]; }
double phi_second(const TangentJets& t) { return t.f[1] * t.g[3] - t.g[1] * t.f[3]; }

// Representative of `principal` modulo 2 pi closest to `predicted`.
double nearest_branch(double principal, double predicted) {
  return principal + kTwoPi * std::round((predicted - principal) / kTwoPi);
}

std::optional<TangentJets> try_tangent_jets(const ProfileCurve& p, double s) {
  try {
    return tangent_jets(p, s);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// Continuous branch of phi at s, tracked from the left end of the domain.
double tracked_phi(const ProfileCurve& p, double s, const TangentJets& at_s) {
  const Interval& J = p.domain();
  const double width = J.width();
  if (!(width > 0.0)) return principal_phi(at_s, s);

  // Anchor at the left end, nudged inward if the closed end is singular.
  double anchor = J.lo;
  std::optional<TangentJets> anchor_jets = try_tangent_jets(p, anchor);
  for (int k = 0; !anchor_jets && k < 8; ++k) {
    anchor = J.lo + width * std::pow(10.0, -9.0 + k);
    anchor_jets = try_tangent_jets(p, anchor);
  }
  if (!anchor_jets) return principal_phi(at_s, s);

  double phi = principal_phi(*anchor_jets, anchor);
  double dphi = phi_prime(*anchor_jets);
  double ddphi = phi_second(*anchor_jets);
  double prev = anchor;

  const double distance = s - anchor;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(distance) / width * kBranchStepsPerDomain)));
  for (int k = 1; k < steps; ++k) {
    const double sk = anchor + distance * k / steps;
    auto jets = try_tangent_jets(p, sk);
    if (!jets || (jets->f[1] == 0.0 && jets->g[1] == 0.0)) continue;
    const double h = sk - prev;
    phi = nearest_branch(principal_phi(*jets, sk), phi + dphi * h + 0.5 * ddphi * h * h);
    dphi = phi_prime(*jets);
    ddphi = phi_second(*jets);
    prev = sk;
  }
  const double h = s - prev;
  return nearest_branch(principal_phi(at_s, s), phi + dphi * h + 0.5 * ddphi * h * h);
}

}  // namespace

ProfileCurve::ProfileCurve(std::string name, Expr f, Expr g, Interval domain, ParamMap params,
                           std::vector<Interval> excluded)
    : name_(std::move(name)),
      f_(std::move(f)),
      g_(std::move(g)),
      domain_(domain),
      params_(std::move(params)),
      excluded_(std::move(excluded)) {
  if (!(domain_.lo < domain_.hi)) {
    throw ProfileError("profile '" + name_ + "': empty domain");
  }
}

ProfileCurve ProfileCurve::from_text(std::string name, std::string_view f, std::string_view g,
                                     Interval domain, ParamMap params, std::vector<Interval> excluded) {
  Expr fe = parse(f, params);
  Expr ge = parse(g, params);
  return ProfileCurve(std::move(name), std::move(fe), std::move(ge), domain, std::move(params),
                      std::move(excluded));
}

bool ProfileCurve::is_excluded(double s) const {
  return std::any_of(excluded_.begin(), excluded_.end(), [s](const Interval& iv) { return iv.lo <= s && s <= iv.hi; });
}

std::vector<double> uniform_samples(const Interval& domain, int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  out.reserve(static_cast<std::size_t>(n));
  const double h = domain.width() / n;
  for (int i = 0; i < n; ++i) out.push_back(domain.lo + (i + 0.5) * h);
  return out;
}

std::vector<double> uniform_angles(int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.push_back(kTwoPi * j / n);
  return out;
}

ValidationReport validate_profile(const ProfileCurve& p, int n_samples, const Tolerances& tol) {
  if (n_samples < 2) throw std::invalid_argument("validate_profile: n_samples must be >= 2");

  ValidationReport report;
  report.samples = n_samples;
  report.min_f = std::numeric_limits<double>::infinity();
  report.min_abs_fg_prime = std::numeric_limits<double>::infinity();
  report.min_parabolic_measure = std::numeric_limits<double>::infinity();

  int regular = 0;
  for (double s : uniform_samples(p.domain(), n_samples)) {
    if (p.is_excluded(s)) {
      ++report.excluded_declared;
      continue;
    }
    TangentJets t;
    try {
      t = tangent_jets(p, s);
    } catch (const DomainError& e) {
      throw e.at_sample(s);
    }
    const double speed2 = t.f[1] * t.f[1] + t.g[1] * t.g[1];
    report.max_arc_defect = std::max(report.max_arc_defect, std::abs(speed2 - 1.0));
    report.min_f = std::min(report.min_f, t.f[0]);
    const double fg = std::abs(t.f[1] * t.g[1]);
    report.max_abs_fg_prime = std::max(report.max_abs_fg_prime, fg);

    const double sin_phi = speed2 > 0.0 ? t.g[1] / std::sqrt(speed2) : 0.0;
    const double measure = std::min(std::abs(phi_prime(t)), std::abs(sin_phi));
    if (measure < tol.parab) {
      ++report.excluded_parabolic;
      continue;
    }
    ++regular;
    report.min_abs_fg_prime = std::min(report.min_abs_fg_prime, fg);
    report.min_parabolic_measure = std::min(report.min_parabolic_measure, measure);
  }

  auto issue = [&](const std::string& what) { report.issues.push_back(what); };
  if (report.max_arc_defect > tol.arc) {
    std::ostringstream os;
    os << "not arclength-parametrized: max |f'^2+g'^2-1| = " << report.max_arc_defect;
    issue(os.str());
  }
  if (!(report.min_f > 0.0)) issue("profile touches or crosses the axis (min f <= 0)");
  if (report.max_abs_fg_prime <= tol.parab) issue("f' g' vanishes identically: cylinder or plane");
  if (regular == 0) issue("no regular (non-parabolic) samples");
  if (regular == 0) {
    report.min_abs_fg_prime = 0.0;
    report.min_parabolic_measure = 0.0;
  }
  report.passed = report.issues.empty();
  return report;
}

Jet<2> phi_jet(const ProfileCurve& p, double s) {
  const TangentJets t = tangent_jets(p, s);
  return Jet<2>({tracked_phi(p, s, t), phi_prime(t), phi_second(t)});
}

ProfileJets profile_jets(const ProfileCurve& p, double s, double tol_parab) {
  ProfileJets pj;
  pj.s = s;
  const TangentJets t = tangent_jets(p, s);
  pj.f = t.f;
  pj.g = t.g;
  pj.phi = Jet<2>({tracked_phi(p, s, t), phi_prime(t), phi_second(t)});

  const double sin_phi = std::sin(pj.phi[0]);
  if (std::abs(pj.phi[1]) < tol_parab || std::abs(sin_phi) < tol_parab) {
    throw ParabolicPointError(s, pj.phi[1], sin_phi);
  }

  // R = 1/phi' + f / sin(phi), differentiated by jet arithmetic.
  const Jet<1> dphi = pj.phi.derivative();
  const Jet<1> sin_jet = sin(pj.phi.truncate<1>());
  pj.R = 1.0 / dphi + pj.f.truncate<1>() / sin_jet;
  return pj;
}

FormsAndCurvature forms_at(const ProfileJets& pj) {
  FormsAndCurvature c;
  const double f = pj.f[0];
  const double sp = pj.sin_phi();
  c.phi = pj.phi[0];
  c.dphi = pj.dphi();
  c.ddphi = pj.ddphi();
  c.g11 = 1.0;
  c.g22 = f * f;
  c.h11 = c.dphi;
  c.h22 = f * sp;
  c.e11 = c.dphi * c.dphi;
  c.e22 = sp * sp;
  c.K = c.dphi * sp / f;
  c.R = pj.R[0];
  c.H = 0.5 * c.K * c.R;
  return c;
}

FormsAndCurvature forms_at(const ProfileCurve& p, double s, double tol_parab) {
  return forms_at(profile_jets(p, s, tol_parab));
}

SurfacePoint point_at(const ProfileCurve& p, double s, double theta) {
  const TangentJets t = tangent_jets(p, s);
  const double phi = principal_phi(t, s);
  SurfacePoint pt;
  pt.s = s;
  pt.theta = std::fmod(theta, kTwoPi);
  if (pt.theta < 0.0) pt.theta += kTwoPi;
  const double c = std::cos(theta), sn = std::sin(theta);
  pt.x = Vec3(t.f[0] * c, t.f[0] * sn, t.g[0]);
  pt.n = Vec3(-std::sin(phi) * c, -std::sin(phi) * sn, std::cos(phi));
  return pt;
}

EmbeddingForms embedding_forms(const ProfileCurve& p, double s, double theta) {
  const TangentJets t = tangent_jets(p, s);
  const double c = std::cos(theta), sn = std::sin(theta);
  const double f = t.f[0];

  const Vec3 x_s(t.f[1] * c, t.f[1] * sn, t.g[1]);
  const Vec3 x_t(-f * sn, f * c, 0.0);
  const Vec3 x_ss(t.f[2] * c, t.f[2] * sn, t.g[2]);
  const Vec3 x_st(-t.f[1] * sn, t.f[1] * c, 0.0);
  const Vec3 x_tt(-f * c, -f * sn, 0.0);

  // Gauss-map derivatives from N = x_s x x_t: n_i = (N_i - n (n . N_i)) / |N|.
  const Vec3 N = x_s.cross(x_t);
  const double len = N.norm();
  const Vec3 n = N / len;
  const Vec3 N_s = x_ss.cross(x_t) + x_s.cross(x_st);
  const Vec3 N_t = x_st.cross(x_t) + x_s.cross(x_tt);
  const Vec3 n_s = (N_s - n * n.dot(N_s)) / len;
  const Vec3 n_t = (N_t - n * n.dot(N_t)) / len;

  EmbeddingForms ef;
  ef.x_s = x_s;
  ef.x_theta = x_t;
  ef.n = n;
  ef.g11 = x_s.dot(x_s);
  ef.g12 = x_s.dot(x_t);
  ef.g22 = x_t.dot(x_t);
  ef.h11 = x_ss.dot(n);
  ef.h12 = x_st.dot(n);
  ef.h22 = x_tt.dot(n);
  ef.e11 = n_s.dot(n_s);
  ef.e12 = n_s.dot(n_t);
  ef.e22 = n_t.dot(n_t);
  return ef;
}

Grid build_grid(const ProfileCurve& p, GridSpec spec, const Tolerances& tol) {
  if (spec.n_s < 1 || spec.n_theta < 1) throw std::invalid_argument("build_grid: empty grid");

  enum class Outcome { Regular, Declared, Parabolic, Domain };
  const std::vector<double> ss = uniform_samples(p.domain(), spec.n_s);
  std::vector<Outcome> outcome(ss.size(), Outcome::Regular);
  std::vector<ProfileJets> jets(ss.size());

  parallel_for(ss.size(), [&](std::size_t i) {
    if (p.is_excluded(ss[i])) {
      outcome[i] = Outcome::Declared;
      return;
    }
    try {
      jets[i] = profile_jets(p, ss[i], tol.parab);
    } catch (const ParabolicPointError&) {
      outcome[i] = Outcome::Parabolic;
    } catch (const DomainError&) {
      outcome[i] = Outcome::Domain;
    }
  });

  Grid grid;
  grid.requested_s = spec.n_s;
  grid.thetas = uniform_angles(spec.n_theta);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    switch (outcome[i]) {
      case Outcome::Regular: grid.rings.push_back(jets[i]); break;
      case Outcome::Declared: ++grid.excluded_declared; break;
      case Outcome::Parabolic: ++grid.excluded_parabolic; break;
      case Outcome::Domain: ++grid.excluded_domain; break;
    }
  }
  return grid;
}

}  // namespace revtype
