#pragma once

// Vehicle dynamics constraints applied as unscented pseudo-measurements:
// non-holonomic constraint with a second-order sideslip polynomial, and
// zero-velocity updates gated by vibration-based stationarity detection plus
// a chi-square innovations test.

#include <deque>

#include "tcnav/core.hpp"
#include "tcnav/ins.hpp"
#include "tcnav/manifold.hpp"
#include "tcnav/stats.hpp"
#include "tcnav/ut.hpp"

namespace tcnav {

struct VdcParams {
  double p0 = 0.0;  // sideslip polynomial: v_y = p0 w_z + p1 w_z^2
  double p1 = 0.0;
  double sigma_nhc_y = 0.1;   // m/s
  double sigma_nhc_z = 0.2;   // m/s
  double sigma_zx = 0.05;     // m/s
  double sigma_zy = 0.01;     // m/s
  double sigma_zz = 0.01;     // m/s
  double gamma_zupt_a = 0.8;    // m/s^2
  double gamma_zupt_g = 0.006;  // rad/s
  int n_zupt = 10;
  double pf_zupt = 1e-30;      // chi-square gate false-alarm rate
  Vec3 r_b_v = Vec3(0.0, -1.2, -1.5);  // vehicle-frame origin, body frame [m]
  Mat3 R_vb = Mat3::Identity();        // body-to-vehicle rotation
  Vec3 r_b_u = Vec3(-0.25, 0.30, -0.15);  // IMU origin, body frame [m]
};

// Vehicle-frame velocity of the vehicle-frame origin.
inline Vec3 vehicle_velocity(const NavState& x, const Vec3& omega_b,
                             const VdcParams& p) {
  return p.R_vb *
         (x.R_wb.transpose() * x.v_w + omega_b.cross(p.r_b_v - p.r_b_u));
}

// Lateral/vertical components, the NHC observation.
inline Vec2 nhc_predict(const NavState& x, const Vec3& omega_b, const VdcParams& p) {
  const Vec3 v_v = vehicle_velocity(x, omega_b, p);
  return Vec2(v_v.y(), v_v.z());
}

// NHC pseudo-measurement z = [sideslip(w_z); 0].
inline Belief nhc_update(const Belief& belief, const Vec3& omega_b,
                         const VdcParams& p) {
  const double wz = (p.R_vb * omega_b).z();
  VecX z(2);
  z << p.p0 * wz + p.p1 * wz * wz, 0.0;
  MatX r = MatX::Zero(2, 2);
  r(0, 0) = p.sigma_nhc_y * p.sigma_nhc_y;
  r(1, 1) = p.sigma_nhc_z * p.sigma_nhc_z;
  return unscented_update(
      belief, [&](const NavState& x) -> VecX { return nhc_predict(x, omega_b, p); },
      z, r);
}

// Sliding window of pass/fail flags over consecutive-sample differences.
struct StationarityState {
  std::deque<bool> window;
};

// Push one (|df|, |dw|) sample; stationary iff the last n_zupt samples all
// passed both thresholds.
inline bool zupt_detect(StationarityState& s, const Vec3& delta_f,
                        const Vec3& delta_omega, const VdcParams& p) {
  const bool pass =
      delta_f.norm() < p.gamma_zupt_a && delta_omega.norm() < p.gamma_zupt_g;
  s.window.push_back(pass);
  while (static_cast<int>(s.window.size()) > p.n_zupt) s.window.pop_front();
  if (static_cast<int>(s.window.size()) < p.n_zupt) return false;
  for (bool b : s.window) {
    if (!b) return false;
  }
  return true;
}

// Zero-velocity pseudo-measurement, gated on the innovations NIS so a falsely
// detected ZUPT on a moving platform is skipped.
inline std::pair<Belief, bool> zupt_update(const Belief& belief, const Vec3& omega_b,
                                           const VdcParams& p) {
  const VecX z = VecX::Zero(3);
  MatX r = MatX::Zero(3, 3);
  r(0, 0) = p.sigma_zx * p.sigma_zx;
  r(1, 1) = p.sigma_zy * p.sigma_zy;
  r(2, 2) = p.sigma_zz * p.sigma_zz;
  auto h = [&](const NavState& x) -> VecX {
    return VecX(vehicle_velocity(x, omega_b, p));
  };
  const double nis = unscented_nis(belief, h, z, r);
  const double gate = chi2_quantile_upper(3.0, p.pf_zupt);
  if (nis > gate) return {belief, false};
  return {unscented_update(belief, h, z, r), true};
}

}  // namespace tcnav
