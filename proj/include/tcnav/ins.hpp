#pragma once

// IMU measurement model, discretized strapdown dynamics with
// Ornstein-Uhlenbeck bias processes, and the on-manifold UKF time update over
// the augmented (state, process noise) space.

#include <cmath>

#include "tcnav/core.hpp"
#include "tcnav/manifold.hpp"
#include "tcnav/ut.hpp"

namespace tcnav {

struct ImuSample {
  Vec3 f_u = Vec3::Zero();      // specific force, IMU frame [m/s^2]
  Vec3 omega_u = Vec3::Zero();  // angular rate, IMU frame [rad/s]
  double t = 0.0;
};

struct ImuParams {
  // Amplitude spectral densities (sqrt of PSD), datasheet-style units
  // converted to SI: (m/s^2)/sqrt(Hz) and (rad/s)/sqrt(Hz).
  double accel_noise_density = 100e-6 * kStdGravity;
  double gyro_noise_density = 0.01 * M_PI / 180.0;
  double sigma_ba = 0.5e-3 * kStdGravity;            // bias steady-state [m/s^2]
  double sigma_bg = 8.0 * (M_PI / 180.0) / 3600.0;   // bias steady-state [rad/s]
  double tau_a = 100.0;  // s
  double tau_g = 100.0;  // s
  double dt = 1.0 / 200.0;
  Mat3 R_bu = Mat3::Identity();  // IMU-to-body mounting rotation
  Vec3 g_w = Vec3(0.0, 0.0, -kStdGravity);  // gravity acceleration, world (ENU)
  // Earth rate in the world ENU frame (default latitude 30.2672 deg N).
  Vec3 omega_earth_w = kEarthRateRadS *
      Vec3(0.0, std::cos(30.2672 * M_PI / 180.0), std::sin(30.2672 * M_PI / 180.0));
  // Discrete OU driving variance: sigma_b^2 (1 - exp(-c dt/tau)) with c = 1
  // as printed in the model description, or the exact c = 2 form.
  bool ou_exact = false;
};

struct ProcessNoise {
  Vec12 variances = Vec12::Zero();  // [v_a, v_g, v_a2, v_g2] x 3, diagonal Q
};

inline ProcessNoise process_noise(const ImuParams& p) {
  ProcessNoise q;
  // Per-sample white noise std is density / sqrt(dt). (The printed /dt form
  // is dimensionally inconsistent with a noise density.)
  const double var_va = p.accel_noise_density * p.accel_noise_density / p.dt;
  const double var_vg = p.gyro_noise_density * p.gyro_noise_density / p.dt;
  const double c = p.ou_exact ? 2.0 : 1.0;
  const double var_va2 =
      p.sigma_ba * p.sigma_ba * (1.0 - std::exp(-c * p.dt / p.tau_a));
  const double var_vg2 =
      p.sigma_bg * p.sigma_bg * (1.0 - std::exp(-c * p.dt / p.tau_g));
  q.variances.segment<3>(0).setConstant(var_va);
  q.variances.segment<3>(3).setConstant(var_vg);
  q.variances.segment<3>(6).setConstant(var_va2);
  q.variances.segment<3>(9).setConstant(var_vg2);
  return q;
}

namespace detail {

// State-relative pieces of one dynamics step. Splitting the position/velocity
// increments from the absolute state lets the propagation form sigma-point
// deviations without differencing large absolute coordinates.
struct DynamicsIncrement {
  Vec3 dr, dv;
  Mat3 r_next;
  Vec3 omega_b_dt;
  Vec3 b_a_next, b_g_next;
};

inline DynamicsIncrement dynamics_increment(const NavState& x, const ImuSample& u,
                                            const Vec12& v, const ImuParams& p,
                                            double dt) {
  const Vec3 f = u.f_u - x.b_a - v.segment<3>(0);
  const Vec3 omega_earth_u =
      p.R_bu.transpose() * (x.R_wb.transpose() * p.omega_earth_w);
  const Vec3 omega_u = u.omega_u - x.b_g - v.segment<3>(3) - omega_earth_u;
  const Vec3 a_w = x.R_wb * (p.R_bu * f) + p.g_w;
  const Vec3 omega_b = p.R_bu * omega_u;

  DynamicsIncrement inc;
  inc.dr = x.v_w * dt + 0.5 * a_w * dt * dt;
  inc.dv = a_w * dt;
  inc.omega_b_dt = omega_b * dt;
  inc.r_next = x.R_wb * so3_exp(omega_b * dt);
  reorthonormalize(inc.r_next);
  inc.b_a_next = std::exp(-dt / p.tau_a) * x.b_a + v.segment<3>(6);
  inc.b_g_next = std::exp(-dt / p.tau_g) * x.b_g + v.segment<3>(9);
  return inc;
}

}  // namespace detail

// One zero-order-hold step of the strapdown dynamics. v holds process-noise
// sample values in the Q layout above (zero for the deterministic step).
inline NavState dynamics(const NavState& x, const ImuSample& u, const Vec12& v,
                         const ImuParams& p, double dt) {
  const detail::DynamicsIncrement inc = detail::dynamics_increment(x, u, v, p, dt);
  NavState y;
  y.r_w = x.r_w + inc.dr;
  y.v_w = x.v_w + inc.dv;
  y.R_wb = inc.r_next;
  y.b_a = inc.b_a_next;
  y.b_g = inc.b_g_next;
  return y;
}

// On-manifold UKF propagation over the augmented n = 15 + 12 space.
inline Belief ukf_propagate(const Belief& posterior, const ImuSample& u,
                            const ImuParams& p) {
  const int nx = kStateDof, nv = kNoiseDof;
  const int n = nx + nv;
  const UtWeights w = UtWeights::make(n);
  const double scale = std::sqrt(n + w.lambda);

  const MatX lp = chol_with_jitter(posterior.cov);
  const Vec12 qvar = process_noise(p).variances;
  const Vec12 qstd = qvar.cwiseSqrt();

  // chol(blkdiag(P, Q)) = blkdiag(chol(P), sqrt(Q)); columns are sigma
  // directions. Deviations are assembled incrementally in the tangent frame
  // of the propagated center point: the sigma increment dx is known exactly
  // and the dynamics contributes only state-relative pieces, so no large
  // absolute coordinates are differenced. (The huge scaled-UT weights,
  // 1/(2 alpha^2 n), would otherwise amplify eps * |r| round-off above the
  // per-step equilibrium tolerance.)
  const detail::DynamicsIncrement inc0 =
      detail::dynamics_increment(posterior.mean, u, Vec12::Zero(), p, p.dt);
  std::vector<Vec15> dev(2 * n + 1, Vec15::Zero());
  for (int i = 0; i < n; ++i) {
    Vec15 dx = Vec15::Zero();
    Vec12 dv = Vec12::Zero();
    if (i < nx) {
      dx = scale * lp.col(i);
    } else {
      dv(i - nx) = scale * qstd(i - nx);
    }
    for (int side = 0; side < 2; ++side) {
      const double sgn = side == 0 ? 1.0 : -1.0;
      const NavState xi = oplus(posterior.mean, Vec15(sgn * dx));
      const detail::DynamicsIncrement inc =
          detail::dynamics_increment(xi, u, Vec12(sgn * dv), p, p.dt);
      Vec15& d = dev[1 + side * n + i];
      d.segment<3>(0) = sgn * dx.segment<3>(0) + (inc.dr - inc0.dr);
      d.segment<3>(3) = sgn * dx.segment<3>(3) + (inc.dv - inc0.dv);
      // Attitude deviation log(E0^T Exp(s dth) Ei) assembled from residual
      // factors so only small quantities are multiplied.
      {
        const Mat3 s_pert = exp_map_residual(Vec3(sgn * dx.segment<3>(6)));
        const Mat3 f_i = so3_exp_residual(inc.omega_b_dt);
        const Mat3 f_0 = so3_exp_residual(inc0.omega_b_dt);
        const Mat3 m = Mat3::Identity() +
                       (Mat3::Identity() + f_0).transpose() *
                           (f_i - f_0 + s_pert + s_pert * f_i);
        d.segment<3>(6) = log_map(m);
      }
      d.segment<3>(9) = inc.b_a_next - inc0.b_a_next;
      d.segment<3>(12) = inc.b_g_next - inc0.b_g_next;
    }
  }

  Vec15 dbar = Vec15::Zero();  // center-point term vanishes at this anchor
  for (int i = 1; i <= 2 * n; ++i) dbar += w.wi * dev[i];

  Belief prior;
  NavState y0;
  y0.r_w = posterior.mean.r_w + inc0.dr;
  y0.v_w = posterior.mean.v_w + inc0.dv;
  y0.R_wb = inc0.r_next;
  y0.b_a = inc0.b_a_next;
  y0.b_g = inc0.b_g_next;
  prior.mean = oplus(y0, dbar);
  prior.cov.setZero();
  for (int i = 0; i <= 2 * n; ++i) {
    const double wc = (i == 0) ? w.wc0 : w.wi;
    const Vec15 e = dev[i] - dbar;
    prior.cov += wc * e * e.transpose();
  }
  prior.symmetrize_cov();
  return prior;
}

}  // namespace tcnav
