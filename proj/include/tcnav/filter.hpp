#pragma once

// Single navigation filter instance: on-manifold UKF propagation driven by
// IMU samples, CDGNSS fix-or-float (or pseudorange-only) measurement updates,
// and NHC/ZUPT pseudo-measurements at GNSS epoch cadence.

#include <optional>

#include "tcnav/ambiguity.hpp"
#include "tcnav/cdgnss.hpp"
#include "tcnav/ins.hpp"
#include "tcnav/sqrt_update.hpp"
#include "tcnav/vdc.hpp"

namespace tcnav {

struct FilterConfig {
  ImuParams imu;
  NoiseModelParams noise;
  VdcParams vdc;
  AntennaGeometry geometry;
  double aperture_pf = 0.001;
  const ApertureThresholdTable* aperture_table = &ApertureThresholdTable::builtin();
  double outlier_gamma = 1.5;  // pseudorange innovation threshold, sigmas
  bool use_ukf_linearization = true;
  bool enable_nhc = true;
  bool enable_zupt = true;
  bool enable_outlier_rejection = true;
  bool pseudorange_only = false;  // float-only companion filter
};

struct EpochSummary {
  UpdateResult update;
  int n_excluded_sats = 0;
  bool nhc_applied = false;
  bool zupt_applied = false;
  bool stationary = false;
};

class NavFilter {
 public:
  NavFilter(FilterConfig cfg, Belief init)
      : cfg_(std::move(cfg)), belief_(std::move(init)) {}

  const Belief& belief() const { return belief_; }
  Belief& belief() { return belief_; }
  const FilterConfig& config() const { return cfg_; }
  bool stationary() const { return stationary_; }
  const Vec3& omega_b() const { return omega_b_; }

  // Time update per IMU sample; also feeds the ZUPT stationarity detector
  // with consecutive-sample differences.
  void propagate(const ImuSample& u) {
    if (have_prev_imu_) {
      stationary_ = zupt_detect(zupt_state_, u.f_u - prev_imu_.f_u,
                                u.omega_u - prev_imu_.omega_u, cfg_.vdc);
    }
    prev_imu_ = u;
    have_prev_imu_ = true;
    belief_ = ukf_propagate(belief_, u, cfg_.imu);
    // Bias-corrected angular rate for lever-arm terms.
    const Vec3 omega_earth_u = cfg_.imu.R_bu.transpose() *
                               (belief_.mean.R_wb.transpose() * cfg_.imu.omega_earth_w);
    omega_b_ = cfg_.imu.R_bu * (u.omega_u - belief_.mean.b_g - omega_earth_u);
  }

  LinearizedBaselines linearize() const {
    return cfg_.use_ukf_linearization ? linearize_ukf(belief_, cfg_.geometry)
                                      : linearize_ekf(belief_, cfg_.geometry);
  }

  // Measurement epoch: GNSS update (with the supplied linearization of the
  // current prior), then NHC, then gated ZUPT.
  EpochSummary process_epoch(const DdEpoch& epoch, const LinearizedBaselines& lin) {
    EpochSummary out;
    UpdateParams up;
    up.pf = cfg_.aperture_pf;
    up.table = cfg_.aperture_table;
    up.pseudorange_only = cfg_.pseudorange_only;
    out.update = measurement_update(belief_, epoch, lin, up);
    belief_ = out.update.posterior;

    if (cfg_.enable_nhc) {
      belief_ = nhc_update(belief_, omega_b_, cfg_.vdc);
      out.nhc_applied = true;
    }
    out.stationary = stationary_;
    if (cfg_.enable_zupt && stationary_) {
      auto [post, applied] = zupt_update(belief_, omega_b_, cfg_.vdc);
      belief_ = post;
      out.zupt_applied = applied;
    }
    return out;
  }

  EpochSummary process_epoch(const DdEpoch& epoch) {
    return process_epoch(epoch, linearize());
  }

 private:
  FilterConfig cfg_;
  Belief belief_;
  StationarityState zupt_state_;
  bool stationary_ = false;
  bool have_prev_imu_ = false;
  ImuSample prev_imu_;
  Vec3 omega_b_ = Vec3::Zero();
};

}  // namespace tcnav
