#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <revtype/catalog.hpp>
#include <revtype/errors.hpp>
#include <revtype/profile.hpp>
#include <revtype/verification.hpp>

namespace revtype {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<CatalogEntry> catalog_surfaces() {
  return {catenoid(1.0), catenoid(2.0), sphere(0.5), sphere(1.0), sphere(2.0), sphere(5.0), torus(3.0, 1.0)};
}

TEST(Validate, CatenoidPasses) {
  const ProfileCurve p = ProfileCurve::from_text("catenoid", "sqrt(1+s^2)", "asinh(s)", {-2, 2});
  const ValidationReport v = validate_profile(p, 101);
  EXPECT_TRUE(v.passed);
  EXPECT_LE(v.max_arc_defect, 1e-12);
  EXPECT_TRUE(v.issues.empty());
}

TEST(Validate, SpherePasses) {
  const ProfileCurve p = ProfileCurve::from_text("sphere", "sin(s)", "-cos(s)", {0.1, kPi - 0.1});
  const ValidationReport v = validate_profile(p, 101);
  EXPECT_TRUE(v.passed);
  EXPECT_LE(v.max_arc_defect, 4e-16);
}

TEST(Validate, NonUnitSpeedFailsWithDefectOne) {
  const ProfileCurve p = ProfileCurve::from_text("diag", "s", "s", {0.5, 2});
  const ValidationReport v = validate_profile(p, 50);
  EXPECT_FALSE(v.passed);
  EXPECT_DOUBLE_EQ(v.max_arc_defect, 1.0);
}

TEST(Validate, CylinderAndNonPositiveRadiusFail) {
  const ProfileCurve cyl = ProfileCurve::from_text("cylinder", "1", "s", {0, 1});
  EXPECT_FALSE(validate_profile(cyl, 20).passed);
  const ProfileCurve crossing = ProfileCurve::from_text("crossing", "sin(s)", "-cos(s)", {-0.5, 1});
  EXPECT_FALSE(validate_profile(crossing, 20).passed);
}

TEST(Validate, DomainErrorNamesTheSample) {
  const ProfileCurve p = ProfileCurve::from_text("bad", "sqrt(s)", "s", {-1, 1});
  try {
    validate_profile(p, 10);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    ASSERT_TRUE(e.sample().has_value());
    EXPECT_LT(*e.sample(), 0.0);
    EXPECT_NE(std::string(e.what()).find("at s="), std::string::npos);
  }
}

TEST(Validate, RejectsTooFewSamples) {
  EXPECT_THROW(validate_profile(sphere(1).profile, 1), std::invalid_argument);
}

TEST(Profile, EmptyDomainRejected) {
  EXPECT_THROW(ProfileCurve::from_text("x", "s", "s", {1, 1}), ProfileError);
}

TEST(PhiJet, Catenoid) {
  const Jet<2> phi = phi_jet(catenoid(1).profile, 1.0);
  // phi = pi/2 - atan(s)
  EXPECT_NEAR(phi[0], kPi / 4, 1e-14);
  EXPECT_NEAR(phi[1], -0.5, 1e-14);
  EXPECT_NEAR(phi[2], 0.5, 1e-14);
}

TEST(PhiJet, SphereAndTorus) {
  for (double s : {0.3, 1.0, 2.5}) {
    const Jet<2> phi = phi_jet(sphere(1).profile, s);
    EXPECT_NEAR(phi[0], s, 1e-14);
    EXPECT_NEAR(phi[1], 1.0, 1e-14);
    EXPECT_NEAR(phi[2], 0.0, 1e-14);
  }
  const Jet<2> t = phi_jet(torus(3, 1).profile, 0.0);
  EXPECT_NEAR(t[0], kPi / 2, 1e-14);
  EXPECT_NEAR(t[1], 1.0, 1e-14);
  EXPECT_NEAR(t[2], 0.0, 1e-14);
}

TEST(PhiJet, BranchIsContinuousAcrossTheWholeTorus) {
  // phi = pi/2 + s on (-pi, pi) sweeps through +-pi without a jump.
  const ProfileCurve p = torus(3, 1).profile;
  for (double s = -3.1; s < 3.1; s += 0.05) EXPECT_NEAR(phi_jet(p, s)[0], kPi / 2 + s, 1e-12) << s;
}

TEST(Forms, SphereAtPiOverThree) {
  const FormsAndCurvature fc = forms_at(sphere(1).profile, kPi / 3);
  EXPECT_NEAR(fc.g11, 1.0, 1e-14);
  EXPECT_NEAR(fc.g22, 0.75, 1e-14);
  EXPECT_NEAR(fc.e11, 1.0, 1e-14);
  EXPECT_NEAR(fc.e22, 0.75, 1e-14);
  EXPECT_NEAR(fc.h11, 1.0, 1e-14);
  EXPECT_NEAR(fc.h22, 0.75, 1e-14);
  EXPECT_NEAR(fc.R, 2.0, 1e-14);
  EXPECT_NEAR(fc.H, 1.0, 1e-14);
  EXPECT_NEAR(fc.K, 1.0, 1e-14);
}

TEST(Forms, CatenoidAtOne) {
  const FormsAndCurvature fc = forms_at(catenoid(1).profile, 1.0);
  EXPECT_NEAR(fc.h11, -0.5, 1e-14);
  EXPECT_NEAR(std::abs(fc.h22), 1.0, 1e-14);
  EXPECT_NEAR(fc.K, -0.25, 1e-14);
  EXPECT_NEAR(fc.H, 0.0, 1e-14);
  EXPECT_NEAR(fc.R, 0.0, 1e-14);
}

TEST(Forms, TorusCurvatureQuotient) {
  EXPECT_NEAR(forms_at(torus(3, 1).profile, kPi / 4).R, 2 + 3 * std::sqrt(2.0), 1e-12);
  const FormsAndCurvature at0 = forms_at(torus(3, 1).profile, 0.0);
  EXPECT_NEAR(at0.K, 0.25, 1e-14);
  EXPECT_NEAR(at0.H, 0.625, 1e-14);
}

TEST(Forms, ParabolicPointRaises) {
  // Torus top circle: sin phi = cos s = 0 at s = pi/2.
  EXPECT_THROW(forms_at(torus(3, 1).profile, kPi / 2), ParabolicPointError);
}

TEST(Forms, InvariantsOnCatalog) {
  for (const auto& e : catalog_surfaces()) {
    const Grid grid = build_grid(e.profile, {40, 1});
    for (const ProfileJets& pj : grid.rings) {
      const FormsAndCurvature fc = forms_at(pj);
      EXPECT_NEAR(fc.e11, fc.dphi * fc.dphi, 1e-14 * (1 + fc.e11));
      EXPECT_NEAR(fc.e22, std::sin(fc.phi) * std::sin(fc.phi), 1e-14);
      EXPECT_NEAR(fc.R * fc.K, 2 * fc.H, 1e-10 * (1 + std::abs(2 * fc.H)));
      EXPECT_NE(fc.K, 0.0);
      EXPECT_GE(fc.H * fc.H - fc.K, -1e-12 * (1 + std::abs(fc.K))) << e.name << " s=" << pj.s;
    }
  }
}

TEST(Forms, SphereQuotientIsTwiceTheRadius) {
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    const Grid grid = build_grid(sphere(r).profile, {64, 1});
    for (const ProfileJets& pj : grid.rings) EXPECT_NEAR(forms_at(pj).R, 2 * r, 1e-13 * r);
  }
}

TEST(PointAt, Examples) {
  const SurfacePoint a = point_at(sphere(1).profile, kPi / 2, 0.0);
  EXPECT_NEAR((a.x - Vec3(1, 0, 0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((a.n - Vec3(-1, 0, 0)).norm(), 0.0, 1e-15);
  const SurfacePoint b = point_at(catenoid(1).profile, 0.0, kPi / 2);
  EXPECT_NEAR((b.x - Vec3(0, 1, 0)).norm(), 0.0, 1e-15);
  const SurfacePoint c = point_at(torus(3, 1).profile, 0.0, 0.0);
  EXPECT_NEAR((c.x - Vec3(4, 0, 0)).norm(), 0.0, 1e-15);
  const SurfacePoint d = point_at(sphere(1).profile, 1.0, -kPi / 2);
  EXPECT_NEAR(d.theta, 3 * kPi / 2, 1e-15);
}

TEST(PointAt, NormalIsUnitAndOrthogonalToTangents) {
  std::mt19937_64 rng(3);
  for (const auto& e : catalog_surfaces()) {
    const Interval J = e.profile.domain();
    for (int i = 0; i < 1000; ++i) {
      const double s = J.lo + (J.hi - J.lo) * unit_uniform(rng);
      const double theta = 2 * kPi * unit_uniform(rng);
      const SurfacePoint pt = point_at(e.profile, s, theta);
      const EmbeddingForms ef = embedding_forms(e.profile, s, theta);
      EXPECT_LE(std::abs(pt.n.norm() - 1.0), 1e-12);
      EXPECT_LE(std::abs(pt.n.dot(ef.x_s)), 1e-10);
      EXPECT_LE(std::abs(pt.n.dot(ef.x_theta)), 1e-10);
      EXPECT_NEAR(pt.x.head<2>().squaredNorm(), std::pow(e.profile.f_jet(s)[0], 2), 1e-10 * (1 + pt.x.squaredNorm()));
      EXPECT_LE((ef.n - pt.n).norm(), 1e-12);
    }
  }
}

TEST(EmbeddingForms, ThirdFormIsGaussMapPullback) {
  std::mt19937_64 rng(4);
  for (const auto& e : catalog_surfaces()) {
    const Interval J = e.profile.domain();
    for (int i = 0; i < 300; ++i) {
      const double s = J.lo + (J.hi - J.lo) * unit_uniform(rng);
      const double theta = 2 * kPi * unit_uniform(rng);
      ProfileJets pj;
      try {
        pj = profile_jets(e.profile, s);
      } catch (const ParabolicPointError&) {
        continue;
      }
      const FormsAndCurvature fc = forms_at(pj);
      const EmbeddingForms ef = embedding_forms(e.profile, s, theta);
      EXPECT_NEAR(ef.e11, fc.e11, 1e-10);
      EXPECT_NEAR(ef.e22, fc.e22, 1e-10);
      EXPECT_NEAR(ef.e12, 0.0, 1e-10);
      EXPECT_NEAR(ef.h11, fc.h11, 1e-10);
      EXPECT_NEAR(ef.h22, fc.h22, 1e-10 * (1 + std::abs(fc.h22)));
      EXPECT_NEAR(ef.g22, fc.g22, 1e-10 * fc.g22);
      EXPECT_NEAR(ef.g12, 0.0, 1e-10);
    }
  }
}

TEST(Grid, CountsExclusions) {
  const ProfileCurve p = ProfileCurve::from_text("band", "sin(s)", "-cos(s)", {0.2, 2.9}, {}, {{1.4, 1.7}});
  const Grid g = build_grid(p, {27, 8});
  EXPECT_EQ(g.excluded_declared, 3);
  EXPECT_EQ(static_cast<int>(g.rings.size()), 24);
  EXPECT_EQ(g.thetas.size(), 8u);
  EXPECT_EQ(g.point_count(), 24u * 8u);

  // Torus with an even ring count straddles s = +-pi/2 only approximately;
  // a large parabolic tolerance forces exclusions there.
  Tolerances wide;
  wide.parab = 0.2;
  const Grid t = build_grid(torus(3, 1).profile, {32, 4}, wide);
  EXPECT_GT(t.excluded_parabolic, 0);
  EXPECT_EQ(static_cast<int>(t.rings.size()) + t.excluded_parabolic, 32);
}

TEST(Grid, DomainFailuresAreSkipped) {
  const ProfileCurve p = ProfileCurve::from_text("half", "sqrt(s)", "s", {-1, 1});
  const Grid g = build_grid(p, {10, 4});
  EXPECT_EQ(g.excluded_domain, 5);
}

TEST(Samples, CellCentred) {
  const auto s = uniform_samples({0, 1}, 4);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_DOUBLE_EQ(s[0], 0.125);
  EXPECT_DOUBLE_EQ(s[3], 0.875);
  const auto t = uniform_angles(4);
  EXPECT_DOUBLE_EQ(t[1], kPi / 2);
}

}  // namespace
}  // namespace revtype
