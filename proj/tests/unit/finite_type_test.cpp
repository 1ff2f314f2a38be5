#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <revtype/catalog.hpp>
#include <revtype/errors.hpp>
#include <revtype/finite_type.hpp>

namespace revtype {
namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

TEST(FitMatrix, Sphere) {
  const FitReport r = fit_matrix(sphere(1).profile, {32, 32});
  EXPECT_EQ(r.verdict, Verdict::SphereType);
  EXPECT_LE(max_abs(r.A - 2 * Mat3::Identity()), 1e-8);
  EXPECT_LE(r.rel_residual, 1e-8);
  EXPECT_EQ(r.rank, 3);
  EXPECT_EQ(r.points_used, 1024u);
  EXPECT_NEAR(r.lambda, 2.0, 1e-10);
  EXPECT_NEAR(r.mu, 2.0, 1e-10);
}

TEST(FitMatrix, Catenoid) {
  const FitReport r = fit_matrix(catenoid(1).profile, {32, 32});
  EXPECT_EQ(r.verdict, Verdict::NullType);
  EXPECT_LE(max_abs(r.A), 1e-8);
  EXPECT_LE(r.sup_laplacian, 1e-8 * r.sup_position);
}

TEST(FitMatrix, TorusMatchesFrozenDenseFit) {
  // Reference values from an independent dense least-squares fit on the same
  // cell-centred 32 x 32 grid.
  const FitReport r = fit_matrix(torus(3, 1).profile, {32, 32});
  EXPECT_EQ(r.verdict, Verdict::NotCoordinateFiniteType);
  EXPECT_NEAR(r.rel_residual, 0.9061926879548688, 1e-9);
  EXPECT_GT(r.rel_residual, 0.05);
  EXPECT_NEAR(r.A(0, 0), 15.26315789474, 1e-9);
  EXPECT_NEAR(r.A(1, 1), 15.26315789474, 1e-9);
  EXPECT_NEAR(r.A(2, 2), 2.0, 1e-9);
}

TEST(FitMatrix, SphereRadiusCovariance) {
  for (double r : {0.5, 1.0, 2.0, 4.0, 5.0}) {
    const FitReport a = fit_matrix(sphere(r).profile, {32, 32});
    const FitReport b = fit_matrix(sphere(2 * r).profile, {32, 32});
    EXPECT_LE(max_abs(a.A - b.A), 1e-10) << r;
    EXPECT_EQ(b.verdict, Verdict::SphereType);
  }
}

TEST(FitMatrix, GridPreconditions) {
  EXPECT_THROW(fit_matrix(sphere(1).profile, {32, 3}), std::invalid_argument);
  // The single ring of the catenoid sits at the waist, g = 0.
  const FitReport one_ring = fit_matrix(catenoid(1).profile, {1, 16});
  EXPECT_EQ(one_ring.verdict, Verdict::Inconclusive);
  EXPECT_LT(one_ring.rank, 3);
  EXPECT_FALSE(one_ring.diagnostic.empty());
}

TEST(FitMatrix, TooFewRegularPoints) {
  const std::vector<FitSample> few(8);
  const FitReport r = fit_samples_matrix(few);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  EXPECT_NE(r.diagnostic.find("fewer than 9"), std::string::npos);
}

TEST(FitMatrix, ExclusionsAreReported) {
  Tolerances wide;
  wide.parab = 0.2;
  const FitReport r = fit_matrix(torus(3, 1).profile, {32, 8}, wide);
  EXPECT_GT(r.excluded_parabolic, 0);
  EXPECT_EQ(r.points_used, static_cast<std::size_t>((32 - r.excluded_parabolic) * 8));
}

TEST(Structure, BlockPatternOnEveryCatalogSurface) {
  for (const auto& e : {sphere(1), sphere(5), catenoid(1), catenoid(2), torus(3, 1), torus(5, 2)}) {
    for (int nt : {4, 7, 32}) {
      const FitReport r = fit_matrix(e.profile, {32, nt});
      EXPECT_LE(r.structure.offdiag_max, 1e-8) << e.name << " n_theta=" << nt;
      EXPECT_LE(r.structure.diag_split, 1e-8) << e.name << " n_theta=" << nt;
      EXPECT_TRUE(r.structure.passed);
    }
  }
  EXPECT_LE(fit_matrix(torus(3, 1).profile, {32, 32}).structure.offdiag_max, 1e-9);
  EXPECT_LE(fit_matrix(sphere(1).profile, {32, 32}).structure.diag_split, 1e-10);
  EXPECT_LE(fit_matrix(catenoid(1).profile, {32, 32}).structure.offdiag_max, 1e-10);
}

TEST(Structure, FlagsABrokenPattern) {
  FitReport r;
  r.A = Mat3::Identity();
  r.A(0, 2) = 1e-3;
  EXPECT_FALSE(structure_check(r, 1e-8).passed);
  EXPECT_DOUBLE_EQ(structure_check(r, 1e-8).offdiag_max, 1e-3);
  r.A(0, 2) = 0;
  r.A(1, 1) = 1.5;
  EXPECT_DOUBLE_EQ(structure_check(r, 1e-8).diag_split, 0.5);
}

TEST(Classify, DeadBandBetweenThresholds) {
  FitReport r;
  r.rank = 3;
  r.points_used = 100;
  r.sup_position = 1.0;
  r.sup_laplacian = 1.0;
  r.A = 3 * Mat3::Identity();
  r.rel_residual = 1e-3;
  EXPECT_EQ(classify(r), Verdict::Inconclusive);
  r.rel_residual = 1e-2;
  EXPECT_EQ(classify(r), Verdict::NotCoordinateFiniteType);
  r.A = 2 * Mat3::Identity();
  r.rel_residual = 1e-7;
  EXPECT_EQ(classify(r), Verdict::SphereType);
  r.A(0, 0) += 2e-6;
  EXPECT_EQ(classify(r), Verdict::Inconclusive);
  r.A = Mat3::Zero();
  r.sup_laplacian = 1e-7;
  EXPECT_EQ(classify(r), Verdict::NullType);
  r.rank = 2;
  EXPECT_EQ(classify(r), Verdict::Inconclusive);
}

TEST(Classify, VerdictStrings) {
  EXPECT_EQ(to_string(Verdict::NullType), "NullType");
  EXPECT_EQ(to_string(Verdict::SphereType), "SphereType");
  EXPECT_EQ(to_string(Verdict::NotCoordinateFiniteType), "NotCoordinateFiniteType");
  EXPECT_EQ(to_string(Verdict::Inconclusive), "Inconclusive");
}

std::vector<double> interior_samples(const ProfileCurve& p, int n) { return uniform_samples(p.domain(), n); }

TEST(ReducedResiduals, SphereAndCatenoid) {
  const ProfileCurve sph = sphere(1).profile;
  const ReducedResiduals a = reduced_residuals(sph, 2, 2, interior_samples(sph, 50));
  EXPECT_LE(a.coordinate_residual, 1e-10);
  EXPECT_LE(a.quotient_residual, 1e-10);
  EXPECT_LE(a.quotient_slope_residual, 1e-10);
  const ProfileCurve cat = catenoid(1).profile;
  const ReducedResiduals b = reduced_residuals(cat, 0, 0, interior_samples(cat, 50));
  EXPECT_LE(b.coordinate_residual, 1e-10);
  EXPECT_LE(b.quotient_residual, 1e-10);
  EXPECT_LE(b.quotient_slope_residual, 1e-10);
}

TEST(ReducedResiduals, TorusIsFarFromAnySphere) {
  const ProfileCurve tor = torus(3, 1).profile;
  const ReducedResiduals r = reduced_residuals(tor, 2, 2, interior_samples(tor, 32));
  EXPECT_GT(r.coordinate_residual, 0.1);
  EXPECT_EQ(r.samples, 32u);
}

TEST(ReducedResiduals, ParabolicSampleRaises) {
  const std::vector<double> top = {kPi / 2};
  EXPECT_THROW(reduced_residuals(torus(3, 1).profile, 2, 2, top), ParabolicPointError);
}

TEST(DerivativeRelation, HoldsWhereTheReducedSystemHolds) {
  const ProfileCurve sph = sphere(1).profile;
  const DerivativeRelationCheck a = derivative_relation_check(sph, 2, 2, interior_samples(sph, 40));
  EXPECT_LE(a.defect, 1e-10);
  EXPECT_TRUE(a.applicable);
  const ProfileCurve cat = catenoid(1).profile;
  const DerivativeRelationCheck b = derivative_relation_check(cat, 0, 0, interior_samples(cat, 40));
  EXPECT_LE(b.defect, 1e-10);
  EXPECT_TRUE(b.applicable);
}

TEST(DerivativeRelation, FlaggedNotApplicableOffTheReducedSystem) {
  const ProfileCurve tor = torus(3, 1).profile;
  const DerivativeRelationCheck c = derivative_relation_check(tor, 3, 1, interior_samples(tor, 40));
  EXPECT_FALSE(c.applicable);
  EXPECT_GT(c.defect, 0.0);
  EXPECT_GT(c.reduced_system_residual, 1e-6);
}

TEST(DerivativeRelation, ConsistencyChain) {
  // Perturbing lambda away from the sphere's value makes the reduced system
  // fail by O(delta); the derivative relation then fails by at most C delta.
  const ProfileCurve sph = sphere(1).profile;
  const auto samples = interior_samples(sph, 40);
  double worst_ratio = 0.0;
  for (double delta : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const ReducedResiduals red = reduced_residuals(sph, 2 + delta, 2, samples);
    const double eps = std::max({red.coordinate_residual, red.quotient_residual, red.quotient_slope_residual});
    const DerivativeRelationCheck d = derivative_relation_check(sph, 2 + delta, 2, samples);
    ASSERT_GT(eps, 0.0);
    worst_ratio = std::max(worst_ratio, d.defect / eps);
  }
  EXPECT_LE(worst_ratio, 1.0);
  EXPECT_GT(worst_ratio, 0.1);
}

}  // namespace
}  // namespace revtype
