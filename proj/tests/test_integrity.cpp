#include <gtest/gtest.h>

#include <cmath>

#include "tcnav/integrity.hpp"
#include "test_support.hpp"

using namespace tcnav;
using tsup::draw_epoch;
using tsup::test_belief;
using tsup::test_sats;

namespace {

ImuSample stationary_input(const NavState& x, const ImuParams& p) {
  ImuSample u;
  u.f_u = p.R_bu.transpose() * (x.R_wb.transpose() * (-p.g_w)) + x.b_a;
  u.omega_u = p.R_bu.transpose() * (x.R_wb.transpose() * p.omega_earth_w) + x.b_g;
  return u;
}

FilterConfig small_test_config() {
  FilterConfig cfg;
  cfg.vdc.r_b_v = Vec3::Zero();
  cfg.vdc.r_b_u = Vec3::Zero();
  cfg.geometry.r_b_u = Vec3::Zero();
  cfg.aperture_pf = 0.001;
  return cfg;
}

// Inject an undifferenced pseudorange bias at the primary antenna for one
// satellite: +bias on its baseline-1 DD channel(s), -bias on baseline-2.
void inject_primary_antenna_fault(DdEpoch& e, int sat_id, double bias) {
  int row = 0;
  const int n1 = e.sats.n1(), n2 = e.sats.n2();
  for (const auto& band : e.sats.baseline1.bands) {
    for (const auto& ch : band.sats) {
      if (ch.sat_id == sat_id) e.z(row) += bias;
      ++row;
    }
  }
  row = 2 * n1;
  for (const auto& band : e.sats.baseline2.bands) {
    for (const auto& ch : band.sats) {
      if (ch.sat_id == sat_id) e.z(row) -= bias;
      ++row;
    }
  }
  (void)n2;
}

// Multipath at the primary antenna: biases the satellite's pseudorange and
// phase on both baselines that share the antenna.
void inject_multipath_fault(DdEpoch& e, int sat_id, double rho_bias,
                            double phase_bias) {
  const int n1 = e.sats.n1(), n2 = e.sats.n2();
  int c = 0;
  for (const auto& band : e.sats.baseline1.bands) {
    for (const auto& ch : band.sats) {
      if (ch.sat_id == sat_id) {
        e.z(c) += rho_bias;
        e.z(n1 + c) += phase_bias;
      }
      ++c;
    }
  }
  c = 0;
  for (const auto& band : e.sats.baseline2.bands) {
    for (const auto& ch : band.sats) {
      if (ch.sat_id == sat_id) {
        e.z(2 * n1 + c) -= rho_bias;
        e.z(2 * n1 + n2 + c) -= phase_bias;
      }
      ++c;
    }
  }
}

// Shift all baseline-1 phase measurements consistently with a position
// offset d: the signature of correlated multipath that induces false fixes.
void inject_phase_position_fault(DdEpoch& e, const Vec3& d) {
  const MatX g1 = geometry_matrix(e.sats.baseline1);
  const int n1 = e.sats.n1();
  e.z.segment(n1, n1) += g1 * d;
}

struct MiniSim {
  // Static-truth closed loop at 20 Hz IMU / 2 Hz GNSS (keeps tests quick).
  NavState truth;
  FilterConfig cfg;
  IntegrityConfig icfg;
  AntennaGeometry geom;
  NoiseModelParams noise;
  Rng rng{777};

  MiniSim() {
    cfg = small_test_config();
    cfg.imu.dt = 1.0 / 20.0;
    geom = cfg.geometry;
    noise = cfg.noise;
  }

  Belief init_belief() {
    Belief b;
    b.mean = truth;
    b.cov.setZero();
    b.cov.block<3, 3>(0, 0) = 0.09 * Mat3::Identity();
    b.cov.block<3, 3>(3, 3) = 0.04 * Mat3::Identity();
    b.cov(6, 6) = b.cov(7, 7) = std::pow(0.5 * M_PI / 180, 2);
    b.cov(8, 8) = std::pow(1.5 * M_PI / 180, 2);
    b.cov.block<3, 3>(9, 9) = 1e-4 * Mat3::Identity();
    b.cov.block<3, 3>(12, 12) = 1e-6 * Mat3::Identity();
    return b;
  }

  const NoiseModelParams* gen_noise = nullptr;

  DdEpoch make_epoch(double t, int n_sats = 10) {
    Belief tb;
    tb.mean = truth;
    auto d = draw_epoch(tb, geom, noise, test_sats(n_sats), rng, false, gen_noise);
    d.epoch.t = t;
    return d.epoch;
  }

  EpochReportData run_epoch(DualFilter& df, const DdEpoch& e) {
    for (int k = 0; k < 10; ++k) {
      ImuSample u = stationary_input(truth, cfg.imu);
      u.f_u += 1e-4 * rng.normal_vec3();
      u.omega_u += 1e-6 * rng.normal_vec3();
      u.t = e.t - 0.5 + cfg.imu.dt * k;
      df.propagate(u);
    }
    return df.step_epoch(e);
  }
};

}  // namespace

TEST(OutlierRejection, CleanEpochKeepsEverything) {
  Rng rng(71);
  const AntennaGeometry geom;
  const Belief prior = test_belief(0.5, 0.2, 1.0, 2.0);
  auto d = draw_epoch(prior, geom, NoiseModelParams{}, test_sats(6), rng);
  // Zero innovations exactly: replace z with the prediction at the prior.
  const LinearizedBaselines lin = linearize_ukf(prior, geom);
  d.epoch.z = dd_predict(lin.b_bar, VecXi::Zero(12), d.epoch.sats);
  const OutlierResult r = reject_pseudorange_outliers(prior, d.epoch, lin, 1.5);
  EXPECT_TRUE(r.excluded_sat_ids.empty());
  EXPECT_EQ(r.pruned.sats.n_total(), 12);
}

TEST(OutlierRejection, DetectionStatisticThreshold) {
  // nu = 3 with unit innovation variance at gamma = 1.5: q = 9 > 2.25.
  Rng rng(72);
  const AntennaGeometry geom;
  Belief prior = test_belief(0.1, 0.1, 0.5, 0.5);
  auto d = draw_epoch(prior, geom, NoiseModelParams{}, test_sats(6), rng);
  const LinearizedBaselines lin = linearize_ukf(prior, geom);
  d.epoch.z = dd_predict(lin.b_bar, d.n_true, d.epoch.sats);
  // Push one baseline-1 channel to ~3x its innovation sigma.
  const MeasurementGeometry mg = measurement_geometry(d.epoch.sats);
  const auto rr = pseudorange_rows(d.epoch.sats);
  const MatX p_bb = lin.h_b * prior.cov * lin.h_b.transpose() + lin.sigma_b;
  const MatX gs_r = tcnav::detail::select_rows(mg.gs, rr);
  const MatX p_rho =
      gs_r * p_bb * gs_r.transpose() + tcnav::detail::select_rows_cols(d.epoch.sigma_g, rr);
  d.epoch.z(2) += 3.0 * std::sqrt(p_rho(2, 2));
  const OutlierResult r = reject_pseudorange_outliers(prior, d.epoch, lin, 1.5);
  const int bad_id = d.epoch.sats.baseline1.bands[0].sats[2].sat_id;
  ASSERT_EQ(r.excluded_sat_ids.size(), 1u);
  EXPECT_EQ(r.excluded_sat_ids[0], bad_id);
  // Satellite removed everywhere: both baselines lost one channel.
  EXPECT_EQ(r.pruned.sats.n1(), 5);
  EXPECT_EQ(r.pruned.sats.n2(), 5);
}

TEST(OutlierRejection, FaultedSatelliteExcludedReliably) {
  // +15 m at the primary antenna, 10 satellites: the corrupted satellite is
  // excluded (on all baselines) in at least 99% of epochs.
  Rng rng(73);
  const AntennaGeometry geom;
  const NoiseModelParams noise;
  int excluded = 0;
  const int trials = 300;
  for (int t = 0; t < trials; ++t) {
    const Belief prior = test_belief(0.5, 0.2, 1.0, 2.0);
    auto d = draw_epoch(prior, geom, noise, test_sats(10), rng);
    const int victim = d.epoch.sats.baseline1.bands[0].sats[2].sat_id;  // el 55
    inject_primary_antenna_fault(d.epoch, victim, 15.0);
    const LinearizedBaselines lin = linearize_ukf(prior, geom);
    const OutlierResult r = reject_pseudorange_outliers(prior, d.epoch, lin, 1.5);
    const bool gone = std::find(r.excluded_sat_ids.begin(), r.excluded_sat_ids.end(),
                                victim) != r.excluded_sat_ids.end();
    if (gone) {
      ++excluded;
      for (const auto& band : r.pruned.sats.baseline1.bands)
        for (const auto& ch : band.sats) EXPECT_NE(ch.sat_id, victim);
      for (const auto& band : r.pruned.sats.baseline2.bands)
        for (const auto& ch : band.sats) EXPECT_NE(ch.sat_id, victim);
    }
  }
  EXPECT_GE(excluded, static_cast<int>(0.99 * trials));
}

TEST(OutlierRejection, AllChannelsRemovedYieldsEmptyEpoch) {
  Rng rng(74);
  const AntennaGeometry geom;
  Belief prior = test_belief(0.1, 0.1, 0.5, 0.5);
  auto d = draw_epoch(prior, geom, NoiseModelParams{}, test_sats(2), rng);
  const LinearizedBaselines lin = linearize_ukf(prior, geom);
  // Blow up every pseudorange.
  for (int i = 0; i < d.epoch.sats.n1(); ++i) d.epoch.z(i) += 500.0;
  for (int i = 0; i < d.epoch.sats.n2(); ++i) d.epoch.z(2 * d.epoch.sats.n1() + i) += 500.0;
  const OutlierResult r = reject_pseudorange_outliers(prior, d.epoch, lin, 1.5);
  EXPECT_TRUE(r.pruned.empty());
  // The update treats the emptied epoch as propagate-only.
  const UpdateResult u = measurement_update(prior, r.pruned, lin, UpdateParams{});
  EXPECT_EQ(u.outcome.status, FixStatus::kEmpty);
}

TEST(NisWindowTest, ZeroNisNeverAlarms) {
  NisWindow w(10);
  for (int i = 0; i < 50; ++i) {
    EXPECT_FALSE(nis_window_update(w, 0.0, 14, 1e-15));
  }
}

TEST(NisWindowTest, ReferenceThresholdCase) {
  // Psi = 300 on 100 dof: chi2(100) tail quantile at 1e-15 is 256.63 -> alarm.
  NisWindow w(10);
  w.push(280.0, 86);
  EXPECT_TRUE(nis_window_update(w, 20.0, 14, 1e-15));
  EXPECT_EQ(w.n_psi(), 100);
  EXPECT_NEAR(w.psi(), 300.0, 1e-12);
  EXPECT_GT(300.0, chi2_quantile_upper(100, 1e-15));
  // Just below the threshold: no alarm.
  NisWindow w2(10);
  w2.push(236.0, 86);
  EXPECT_FALSE(nis_window_update(w2, 20.0, 14, 1e-15));
  EXPECT_LT(256.0, chi2_quantile_upper(100, 1e-15));
}

TEST(NisWindowTest, EvictionAfterWindowLength) {
  NisWindow w(3);
  w.push(100.0, 5);
  w.push(1.0, 5);
  w.push(1.0, 5);
  EXPECT_NEAR(w.psi(), 102.0, 1e-12);
  w.push(1.0, 5);  // evicts the 100
  EXPECT_NEAR(w.psi(), 3.0, 1e-12);
  EXPECT_EQ(w.n_psi(), 15);
}

TEST(Reseed, EndToEndCriteria) {
  MiniSim sim;
  // The Psi/N ratio criterion (<= 0.5) presumes a conservative noise model:
  // generate at roughly half the modeled sigmas.
  NoiseModelParams tight;
  tight.sigma_rho = 0.7;
  tight.sigma_phi = 0.0025;
  sim.gen_noise = &tight;
  IntegrityConfig icfg;
  DualFilter df(sim.cfg, icfg, sim.init_belief());
  // Run clean epochs; once the last fix has N >= 10, eps/N <= 1, Psi ratio
  // <= 0.5 and no reset has occurred, a re-seed must fire.
  bool reseeded = false;
  for (int k = 0; k < 8; ++k) {
    const EpochReportData rep = df.step_epoch(sim.make_epoch(0.5 * k, 10));
    if (rep.reseeded) {
      reseeded = true;
      EXPECT_EQ(rep.status, FixStatus::kFixed);
      EXPECT_GE(rep.n_channels, 10);
      EXPECT_LE(rep.eps_phi / rep.n_channels, 1.0);
      EXPECT_LE(rep.psi / rep.n_psi, 0.5);
      // Float-only belief copied from primary.
      EXPECT_LT((rep.float_only.cov - rep.primary.cov).norm(), 1e-15);
      break;
    }
  }
  EXPECT_TRUE(reseeded);
  EXPECT_GE(df.counters().reseeds, 1);
}

TEST(Reseed, SingleCriterionFailureBlocks) {
  MiniSim sim;
  NoiseModelParams tight;
  tight.sigma_rho = 0.7;
  tight.sigma_phi = 0.0025;
  sim.gen_noise = &tight;
  DualFilter df(sim.cfg, IntegrityConfig{}, sim.init_belief());
  // N = 9 < 10 blocks even with perfect NIS.
  df.step_epoch(sim.make_epoch(0.0, 8));  // populate window
  EXPECT_FALSE(df.maybe_reseed(10.0, 0.0, 9));
  // Fresh soft reset blocks (t - reset = 0 < 2).
  df.soft_reset(10.0);
  df.step_epoch(sim.make_epoch(10.5, 8));
  EXPECT_FALSE(df.maybe_reseed(10.5, 0.0, 14));
  EXPECT_TRUE(df.maybe_reseed(12.5, 0.0, 14));
}

TEST(SoftReset, CopiesFloatBeliefAndClearsWindow) {
  MiniSim sim;
  DualFilter df(sim.cfg, IntegrityConfig{}, sim.init_belief());
  for (int k = 0; k < 3; ++k) df.step_epoch(sim.make_epoch(0.5 * k, 10));
  EXPECT_GT(df.window().n_psi(), 0);
  const Belief f = df.float_only().belief();
  df.soft_reset(1.5);
  EXPECT_LT(ominus(df.primary().belief().mean, f.mean).norm(), 1e-15);
  EXPECT_LT((df.primary().belief().cov - f.cov).norm(), 1e-15);
  EXPECT_EQ(df.window().n_psi(), 0);
  EXPECT_EQ(df.counters().resets, 1);
  // Subsequent fixes re-tighten the primary only.
  df.step_epoch(sim.make_epoch(2.0, 8));
  EXPECT_LT(df.primary().belief().cov.trace(), df.float_only().belief().cov.trace());
}

TEST(DualFilterLoop, CleanRunBehavior) {
  MiniSim sim;
  DualFilter df(sim.cfg, IntegrityConfig{}, sim.init_belief());
  int fixed = 0;
  for (int k = 0; k < 12; ++k) {
    DdEpoch e = sim.make_epoch(0.5 * k, 10);
    sim.run_epoch(df, e);
    if (df.counters().fixes > 0 &&
        (df.primary().belief().mean.r_w - sim.truth.r_w).norm() < 0.05) {
      ++fixed;
    }
  }
  EXPECT_GE(df.counters().fixes, 8);
  // Primary at centimeter level, float-only at pseudorange level.
  EXPECT_LT((df.primary().belief().mean.r_w - sim.truth.r_w).norm(), 0.05);
  EXPECT_LT((df.float_only().belief().mean.r_w - sim.truth.r_w).norm(), 3.0);
  EXPECT_GT(df.float_only().belief().cov.trace(), df.primary().belief().cov.trace());
}

TEST(DualFilterLoop, FalseFixAlarmAndRecovery) {
  MiniSim sim;
  IntegrityConfig icfg;
  DualFilter df(sim.cfg, icfg, sim.init_belief());
  for (int k = 0; k < 10; ++k) sim.run_epoch(df, sim.make_epoch(0.5 * k, 10));
  EXPECT_EQ(df.counters().resets, 0);
  // Correlated phase fault consistent with a 0.6 m position shift.
  const Vec3 d(0.45, -0.30, 0.25);
  bool alarmed = false;
  int alarm_epoch = -1;
  for (int k = 10; k < 22 && !alarmed; ++k) {
    DdEpoch e = sim.make_epoch(0.5 * k, 10);
    inject_phase_position_fault(e, d);
    sim.run_epoch(df, e);
    if (df.counters().resets > 0) {
      alarmed = true;
      alarm_epoch = k;
    }
  }
  EXPECT_TRUE(alarmed);
  EXPECT_LE(alarm_epoch, 19);  // within l = 10 epochs of onset
  // After the fault clears, the filter re-fixes and recovers.
  for (int k = 22; k < 34; ++k) sim.run_epoch(df, sim.make_epoch(0.5 * k, 10));
  EXPECT_LT((df.primary().belief().mean.r_w - sim.truth.r_w).norm(), 0.30);
}

TEST(DualFilterLoop, FloatOnlyUntouchedByPhaseData) {
  // Information-flow property: with re-seed disabled, garbling every phase
  // measurement leaves the float-only trajectory bit-identical. Both filters
  // consume one identical generated stream.
  MiniSim sim;
  IntegrityConfig icfg;
  icfg.enable_reseed = false;
  DualFilter a(sim.cfg, icfg, sim.init_belief());
  DualFilter b(sim.cfg, icfg, sim.init_belief());
  for (int k = 0; k < 10; ++k) {
    DdEpoch ea = sim.make_epoch(0.5 * k, 10);
    DdEpoch eb = ea;
    const int n1 = eb.sats.n1(), n2 = eb.sats.n2();
    eb.z.segment(n1, n1).array() += 17.3;  // garbage phases
    eb.z.segment(2 * n1 + n2, n2).array() -= 4.1;
    std::vector<ImuSample> imu;
    for (int s = 0; s < 10; ++s) {
      ImuSample u = stationary_input(sim.truth, sim.cfg.imu);
      u.f_u += 1e-4 * sim.rng.normal_vec3();
      u.omega_u += 1e-6 * sim.rng.normal_vec3();
      u.t = ea.t - 0.5 + sim.cfg.imu.dt * s;
      imu.push_back(u);
    }
    for (const auto& u : imu) {
      a.propagate(u);
      b.propagate(u);
    }
    a.step_epoch(ea);
    b.step_epoch(eb);
    // Bit-identical state (field-wise; ominus has its own 1e-20 noise floor).
    const NavState& ma = a.float_only().belief().mean;
    const NavState& mb = b.float_only().belief().mean;
    EXPECT_EQ((ma.r_w - mb.r_w).norm(), 0.0);
    EXPECT_EQ((ma.v_w - mb.v_w).norm(), 0.0);
    EXPECT_EQ((ma.R_wb - mb.R_wb).norm(), 0.0);
    EXPECT_EQ((ma.b_a - mb.b_a).norm(), 0.0);
    EXPECT_EQ((ma.b_g - mb.b_g).norm(), 0.0);
    EXPECT_EQ((a.float_only().belief().cov - b.float_only().belief().cov).norm(), 0.0);
  }
}

TEST(DualFilterLoop, OutlierRejectionPrecedesIls) {
  // A/B: recurring multipath (pseudorange + phase corruption on three
  // satellites). With exclusion the filter keeps producing validated correct
  // fixes; without it, correct-fix availability collapses and recovery
  // resets pile up.
  auto run = [&](bool enable_rejection) {
    MiniSim sim;
    sim.cfg.enable_outlier_rejection = enable_rejection;
    DualFilter df(sim.cfg, IntegrityConfig{}, sim.init_belief());
    long correct = 0;
    for (int k = 0; k < 20; ++k) {
      DdEpoch e = sim.make_epoch(0.5 * k, 10);
      for (int idx : {2, 5, 7}) {
        inject_multipath_fault(e, e.sats.baseline1.bands[0].sats[idx].sat_id,
                               20.0, 0.05);
      }
      const EpochReportData rep = sim.run_epoch(df, e);
      if (rep.status == FixStatus::kFixed &&
          (df.primary().belief().mean.r_w - sim.truth.r_w).norm() < 0.30) {
        ++correct;
      }
    }
    return std::pair<long, long>(correct, df.counters().resets);
  };
  const auto [with_rejection, resets_with] = run(true);
  const auto [without_rejection, resets_without] = run(false);
  EXPECT_GT(with_rejection, without_rejection + 4);
  EXPECT_GE(resets_without, resets_with);
}
