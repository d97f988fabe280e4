#include <gtest/gtest.h>

#include <cmath>

#include "tcnav/cdgnss.hpp"
#include "tcnav/manifold.hpp"
#include "tcnav/rng.hpp"

using namespace tcnav;

namespace {

Vec3 az_el_unit(double az_deg, double el_deg) {
  const double az = az_deg * M_PI / 180.0, el = el_deg * M_PI / 180.0;
  return Vec3(std::cos(el) * std::sin(az), std::cos(el) * std::cos(az),
              std::sin(el));
}

Channel make_channel(int id, double az_deg, double el_deg) {
  Channel c;
  c.sat_id = id;
  c.e_w = az_el_unit(az_deg, el_deg);
  c.elevation = el_deg * M_PI / 180.0;
  return c;
}

// Band with pivot at zenith-ish and sats on a ring.
Band ring_band(int n_sats, double el_deg = 40.0) {
  Band b;
  b.pivot = make_channel(100, 0.0, 85.0);
  for (int i = 0; i < n_sats; ++i) {
    b.sats.push_back(make_channel(i + 1, 360.0 * i / n_sats, el_deg));
  }
  return b;
}

SatelliteSet dual_baseline_set(int n_sats) {
  SatelliteSet s;
  s.baseline1.bands.push_back(ring_band(n_sats));
  s.baseline2.bands.push_back(ring_band(n_sats));
  return s;
}

Belief attitude_belief(double rp_sigma_deg, double yaw_sigma_deg,
                       double pos_sigma = 1.0) {
  Belief b;
  b.cov.setZero();
  const double rp = rp_sigma_deg * M_PI / 180.0;
  const double y = yaw_sigma_deg * M_PI / 180.0;
  b.cov.block<3, 3>(0, 0) = pos_sigma * pos_sigma * Mat3::Identity();
  b.cov.block<3, 3>(3, 3) = 0.01 * Mat3::Identity();
  b.cov(6, 6) = rp * rp;
  b.cov(7, 7) = rp * rp;
  b.cov(8, 8) = y * y;
  b.cov.block<3, 3>(9, 9) = 1e-4 * Mat3::Identity();
  b.cov.block<3, 3>(12, 12) = 1e-8 * Mat3::Identity();
  return b;
}

}  // namespace

TEST(BaselineFunction, PrimaryAtImuOriginGivesZero) {
  AntennaGeometry g;
  g.r_b_u = Vec3::Zero();
  g.r_b_p = Vec3::Zero();
  NavState x;
  EXPECT_LT(baseline_function(x, g).head<3>().norm(), 1e-15);
}

TEST(BaselineFunction, SecondaryBaselineLength) {
  AntennaGeometry g;  // default 1.0668 m along body x
  NavState x;
  const Vec6 b = baseline_function(x, g);
  EXPECT_LT((b.tail<3>() - Vec3(1.0668, 0, 0)).norm(), 1e-15);
}

TEST(BaselineFunction, YawRotatesSecondaryWithoutChangingNorm) {
  AntennaGeometry g;
  NavState x;
  x.R_wb = exp_map(Vec3(0, 0, M_PI / 2));
  const Vec6 b = baseline_function(x, g);
  EXPECT_LT((b.tail<3>() - x.R_wb * Vec3(1.0668, 0, 0)).norm(), 1e-15);
  EXPECT_NEAR(b.tail<3>().norm(), 1.0668, 1e-12);
}

TEST(BaselineFunction, AttitudeBaselineNormInvariant) {
  AntennaGeometry g;
  Rng rng(21);
  const double len = g.baseline_length();
  for (int i = 0; i < 100; ++i) {
    NavState x;
    x.r_w = 100.0 * rng.normal_vec3();
    x.R_wb = exp_map(Vec3(rng.uniform(-1.3, 1.3), rng.uniform(-3, 3),
                          rng.uniform(-3, 3)));
    EXPECT_NEAR(baseline_function(x, g).tail<3>().norm(), len, 1e-12);
  }
}

TEST(GeometryMatrix, UnitVectorDifferenceRows) {
  Band b;
  b.pivot.e_w = Vec3(0, 0, 1);
  Channel c;
  c.e_w = Vec3(1, 0, 0);
  b.sats.push_back(c);
  BaselineSet bl;
  bl.bands.push_back(b);
  const MatX g = geometry_matrix(bl);
  EXPECT_LT((g.row(0) - Eigen::RowVector3d(-1, 0, 1)).norm(), 1e-15);
}

TEST(GeometryMatrix, NonPivotEqualToPivotGivesZeroRow) {
  Band b;
  b.pivot.e_w = az_el_unit(30, 50);
  Channel c;
  c.e_w = b.pivot.e_w;
  b.sats.push_back(c);
  BaselineSet bl;
  bl.bands.push_back(b);
  EXPECT_LT(geometry_matrix(bl).row(0).norm(), 1e-15);
}

TEST(GeometryMatrix, TetrahedronAgainstDirectDifferences) {
  // Regular tetrahedron directions with a zenith pivot.
  std::vector<Vec3> dirs = {Vec3(std::sqrt(8.0 / 9.0), 0, -1.0 / 3.0),
                            Vec3(-std::sqrt(2.0 / 9.0), std::sqrt(2.0 / 3.0), -1.0 / 3.0),
                            Vec3(-std::sqrt(2.0 / 9.0), -std::sqrt(2.0 / 3.0), -1.0 / 3.0),
                            Vec3(0, 0, 1)};
  Band b;
  b.pivot.e_w = Vec3(0, 0, 1);
  for (size_t i = 0; i < dirs.size(); ++i) {
    Channel c;
    c.e_w = dirs[i].normalized();
    b.sats.push_back(c);
  }
  BaselineSet bl;
  bl.bands.push_back(b);
  const MatX g = geometry_matrix(bl);
  for (int j = 0; j < 4; ++j) {
    const Vec3 expect = Vec3(0, 0, 1) - dirs[j].normalized();
    EXPECT_LT((g.row(j).transpose() - expect).norm(), 1e-15);
  }
}

TEST(GeometryMatrix, EmptySatelliteListThrows) {
  Band b;
  BaselineSet bl;
  bl.bands.push_back(b);
  EXPECT_THROW(geometry_matrix(bl), ConfigError);
}

TEST(DdPredict, ZeroAmbiguityMakesPhaseEqualPseudorange) {
  SatelliteSet s;
  Band b;
  b.pivot.e_w = Vec3(0, 0, 1);
  Channel c;
  c.e_w = Vec3(1, 0, 0);
  b.sats.push_back(c);
  s.baseline1.bands.push_back(b);
  Vec6 bl = Vec6::Zero();
  bl.head<3>() = Vec3(1, 0, 0);
  VecXi n = VecXi::Zero(1);
  const VecX z = dd_predict(bl, n, s);
  ASSERT_EQ(z.size(), 2);
  EXPECT_NEAR(z(0), -1.0, 1e-15);
  EXPECT_NEAR(z(1), -1.0, 1e-15);
}

TEST(DdPredict, WavelengthArithmetic) {
  SatelliteSet s;
  Band b;
  b.wavelength = kLambdaL1;  // c / 1575.42 MHz
  b.pivot.e_w = Vec3(0, 0, 1);
  Channel c;
  c.e_w = Vec3(1, 0, 0);
  b.sats.push_back(c);
  s.baseline1.bands.push_back(b);
  Vec6 bl = Vec6::Zero();
  bl.head<3>() = Vec3(1, 0, 0);
  VecXi n(1);
  n << 5;
  const VecX z = dd_predict(bl, n, s);
  EXPECT_NEAR(z(1), -0.04853163600817556, 1e-12);
}

TEST(DdPredict, ZeroBaselineGivesPureAmbiguityPhase) {
  SatelliteSet s = dual_baseline_set(3);
  VecXi n(6);
  n << 1, -2, 3, 0, 4, -1;
  const VecX z = dd_predict(Vec6::Zero(), n, s);
  const VecX lam1 = wavelength_diag(s.baseline1);
  EXPECT_LT(z.head(3).norm(), 1e-15);
  EXPECT_LT((z.segment(3, 3) - lam1.cwiseProduct(n.head(3).cast<double>())).norm(),
            1e-15);
  EXPECT_LT(z.segment(6, 3).norm(), 1e-15);
}

// Hand-assembled D Sigma D^T for one baseline, one non-pivot at zenith:
// DD over antennas {ref, pri} and satellites {i, j}, all variances sigma^2:
// var(DD) = 4 sigma^2.
TEST(DdNoiseCovariance, SingleChannelZenithVariance) {
  SatelliteSet s;
  Band b;
  b.pivot = make_channel(1, 0, 90.0);
  b.sats.push_back(make_channel(2, 0, 90.0));
  s.baseline1.bands.push_back(b);
  NoiseModelParams p;
  p.sigma_rho = 1.5;
  const MatX cov = dd_noise_covariance(s, p);
  ASSERT_EQ(cov.rows(), 2);
  EXPECT_NEAR(cov(0, 0), 4.0 * 1.5 * 1.5, 1e-12);  // 9.0 m^2
}

// The shared primary antenna makes matching DD channels across baselines
// anticorrelated: cov = -(sigma_i^2 + sigma_j^2) = -2 sigma^2 at zenith.
TEST(DdNoiseCovariance, SharedAntennaCrossCovariance) {
  SatelliteSet s;
  Band b;
  b.pivot = make_channel(1, 0, 90.0);
  b.sats.push_back(make_channel(2, 0, 90.0));
  s.baseline1.bands.push_back(b);
  s.baseline2.bands.push_back(b);
  NoiseModelParams p;
  p.sigma_rho = 1.5;
  p.sigma_phi = 0.006;
  const MatX cov = dd_noise_covariance(s, p);
  ASSERT_EQ(cov.rows(), 4);  // [rho1, phi1, rho2, phi2], one channel each
  EXPECT_NEAR(cov(0, 2), -2.0 * 1.5 * 1.5, 1e-12);
  // Phase block scales by (sigma_phi / sigma_rho)^2.
  const double scale = (0.006 / 1.5) * (0.006 / 1.5);
  EXPECT_NEAR(cov(1, 3), cov(0, 2) * scale, 1e-15);
  EXPECT_NEAR(cov(1, 1), cov(0, 0) * scale, 1e-15);
  // Pseudorange and phase noise independent.
  EXPECT_NEAR(cov(0, 1), 0.0, 1e-15);
}

// Brute-force oracle: build the undifferenced covariance and the differencing
// map explicitly for a 2-satellite, elevation-weighted case.
TEST(DdNoiseCovariance, MatchesExplicitAssembly) {
  const double el_piv = 70.0 * M_PI / 180.0, el_sat = 30.0 * M_PI / 180.0;
  SatelliteSet s;
  Band b;
  b.pivot = make_channel(1, 10, 70.0);
  b.sats.push_back(make_channel(2, 200, 30.0));
  s.baseline1.bands.push_back(b);
  NoiseModelParams p;
  p.sigma_rho = 1.5;
  const MatX cov = dd_noise_covariance(s, p);
  const double vp = std::pow(1.5 / std::sin(el_piv), 2);
  const double vs = std::pow(1.5 / std::sin(el_sat), 2);
  // DD = (u_r^i - u_p^i) - (u_r^j - u_p^j): four independent terms.
  EXPECT_NEAR(cov(0, 0), 2.0 * vp + 2.0 * vs, 1e-12);
}

TEST(DdNoiseCovariance, PsdAndNonzeroCrossBlock) {
  SatelliteSet s = dual_baseline_set(5);
  NoiseModelParams p;
  const MatX cov = dd_noise_covariance(s, p);
  Eigen::SelfAdjointEigenSolver<MatX> es(cov);
  EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  // Off-diagonal (baseline1, baseline2) pseudorange block nonzero.
  EXPECT_GT(cov.block(0, 10, 5, 5).cwiseAbs().maxCoeff(), 0.1);
}

TEST(DdNoiseCovariance, RejectsNonPositiveElevation) {
  SatelliteSet s;
  Band b;
  b.pivot = make_channel(1, 0, 90.0);
  Channel bad = make_channel(2, 0, 45.0);
  bad.elevation = 0.0;
  b.sats.push_back(bad);
  s.baseline1.bands.push_back(b);
  EXPECT_THROW(dd_noise_covariance(s, NoiseModelParams{}), ConfigError);
}

TEST(LinearizeEkf, PositionBlockStructureAndZeroSigmaB) {
  AntennaGeometry g;
  Belief b = attitude_belief(2.0, 10.0);
  const LinearizedBaselines lin = linearize_ekf(b, g);
  EXPECT_LT((lin.h_b.block<3, 3>(0, 0) - Mat3::Identity()).norm(), 1e-15);
  EXPECT_LT((lin.h_b.block<3, 3>(3, 0)).norm(), 1e-15);
  EXPECT_LT(lin.sigma_b.norm(), 1e-15);
}

// Central-difference oracle through the actual oplus chart.
TEST(LinearizeEkf, JacobianMatchesFiniteDifferences) {
  AntennaGeometry g;
  Belief b;
  b.mean.r_w = Vec3(3, -2, 1);
  b.mean.R_wb = exp_map(Vec3(0.2, -0.3, 0.8));
  b.cov = Mat15::Identity();
  const LinearizedBaselines lin = linearize_ekf(b, g);
  const double h = 1e-6;
  for (int j = 0; j < 15; ++j) {
    Vec15 d = Vec15::Zero();
    d(j) = h;
    const Vec6 fp = baseline_function(oplus(b.mean, d), g);
    const Vec6 fm = baseline_function(oplus(b.mean, Vec15(-d)), g);
    const Vec6 col = (fp - fm) / (2.0 * h);
    EXPECT_LT((lin.h_b.col(j) - col).norm(), 1e-6) << "column " << j;
  }
}

TEST(LinearizeUkf, NearZeroCovarianceMatchesEkf) {
  AntennaGeometry g;
  Belief b;
  b.mean.R_wb = exp_map(Vec3(0.1, 0.2, -0.4));
  b.cov = 1e-12 * Mat15::Identity();
  const LinearizedBaselines ukf = linearize_ukf(b, g);
  const LinearizedBaselines ekf = linearize_ekf(b, g);
  EXPECT_LT((ukf.b_bar - ekf.b_bar).norm(), 1e-6);
  EXPECT_LT((ukf.h_b - ekf.h_b).norm(), 1e-6);
  EXPECT_LT(ukf.sigma_b.norm(), 1e-9);
}

// UT exactness on a linear observation: joint mean/covariance reproduced to
// machine-level accuracy and sigma_b collapses.
TEST(LinearizeUkf, ExactOnLinearObservation) {
  Rng rng(22);
  Belief b = attitude_belief(5.0, 20.0, 2.0);
  b.mean.r_w = Vec3(1, 2, 3);
  MatX a(6, 15);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 15; ++j) a(i, j) = rng.normal();
  VecX c = rng.normal_vec(6);
  auto h = [&](const NavState& x) -> VecX {
    return a * ominus(x, NavState{}) + c;
  };
  UtJoint j = unscented_joint(b, h, 6);
  const VecX mean_expect = a * ominus(b.mean, NavState{}) + c;
  const MatX cov_expect = a * b.cov * a.transpose();
  EXPECT_LT((j.y_mean - mean_expect).norm() / mean_expect.norm(), 1e-9);
  EXPECT_LT((j.p_yy - cov_expect).norm() / cov_expect.norm(), 1e-9);
  // Implied linearization error is numerically zero.
  const MatX hfit = j.p_xx.ldlt().solve(j.p_xy).transpose();
  const MatX sb = j.p_yy - hfit * j.p_xx * hfit.transpose();
  EXPECT_LT(sb.cwiseAbs().maxCoeff(), 1e-9);
}

// Circular-statistics oracle: with yaw ~ N(0, sigma^2) about a unit baseline,
// E[b] has norm e^(-sigma^2/2). The scaled UT captures the second-order
// shrinkage 1 - sigma^2/2, within 1% of baseline length at sigma = 30 deg.
TEST(LinearizeUkf, CurvedBaselineShrinkage) {
  AntennaGeometry g;
  g.r_b_s = Vec3(1.0, 0.0, 0.0);
  const double sigma = 30.0 * M_PI / 180.0;
  Belief b;
  b.cov = 1e-18 * Mat15::Identity();
  b.cov(8, 8) = sigma * sigma;  // yaw only
  const LinearizedBaselines lin = linearize_ukf(b, g);
  const double closed_form = std::exp(-sigma * sigma / 2.0);

  // 1e6-sample Monte Carlo cross-check of the closed form.
  Rng rng(23);
  double acc = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) acc += std::cos(sigma * rng.normal());
  EXPECT_NEAR(acc / n, closed_form, 5e-4);

  EXPECT_NEAR(lin.b_bar.tail<3>().norm(), closed_form, 0.01);
  // And the UT value is the second-order expansion.
  EXPECT_NEAR(lin.b_bar.tail<3>().norm(), 1.0 - sigma * sigma / 2.0, 1e-4);
}

TEST(LinearizeUkf, SmallSigmaAgreementAndLargeSigmaInflation) {
  AntennaGeometry g;
  {
    Belief b = attitude_belief(0.5, 0.5);
    const LinearizedBaselines ukf = linearize_ukf(b, g);
    const LinearizedBaselines ekf = linearize_ekf(b, g);
    EXPECT_LT((ukf.b_bar - ekf.b_bar).norm(), 1e-4);
    EXPECT_LT((ukf.h_b - ekf.h_b).norm(), 1e-3);
  }
  {
    // Curvature inflation: implied baseline spread strictly exceeds the
    // EKF's H P H^T when yaw sigma >= 10 deg.
    Belief b = attitude_belief(2.0, 10.0);
    const LinearizedBaselines ukf = linearize_ukf(b, g);
    const LinearizedBaselines ekf = linearize_ekf(b, g);
    const MatX p_ukf = ukf.h_b * b.cov * ukf.h_b.transpose() + ukf.sigma_b;
    const MatX p_ekf = ekf.h_b * b.cov * ekf.h_b.transpose();
    EXPECT_GT(p_ukf.trace(), p_ekf.trace() * (1.0 + 1e-6));
    EXPECT_GT(ukf.sigma_b.trace(), 0.0);
  }
}

TEST(LinearizeUkf, SigmaBIsPsd) {
  AntennaGeometry g;
  Belief b = attitude_belief(2.0, 45.0);
  const LinearizedBaselines lin = linearize_ukf(b, g);
  Eigen::SelfAdjointEigenSolver<Mat6> es(lin.sigma_b);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);
}
