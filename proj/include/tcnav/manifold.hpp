#pragma once

// Composite state manifold R^3 x R^3 x SO(3) x R^3 x R^3 with oplus/ominus
// operators. Attitude is stored as a rotation matrix; tangent-space attitude
// increments use the 3-1-2 Euler chart (exp_map / log_map below). The chart
// is valid away from the gimbal condition |R(1,2)| = 1.

#include <cmath>

#include "tcnav/core.hpp"

namespace tcnav {

// Gimbal guard: error out rather than clamp, since a silent clamp corrupts
// covariance transport.
inline constexpr double kGimbalTol = 1e-9;

// 3-1-2 Euler angles [phi, theta, psi] -> rotation matrix.
inline Mat3 exp_map(const Vec3& e) {
  const double cp = std::cos(e(0)), sp = std::sin(e(0));
  const double ct = std::cos(e(1)), st = std::sin(e(1));
  const double cs = std::cos(e(2)), ss = std::sin(e(2));
  Mat3 r;
  r << cs * ct - sp * ss * st, ct * ss + cs * sp * st, -cp * st,
       -cp * ss,               cp * cs,                sp,
       cs * st + ct * sp * ss, ss * st - cs * ct * sp, cp * ct;
  return r;
}

// Inverse of exp_map on the principal domain |phi| < pi/2.
inline Vec3 log_map(const Mat3& r) {
  if (std::abs(r(1, 2)) >= 1.0 - kGimbalTol) {
    throw SingularAttitudeError("log_map: 3-1-2 gimbal condition |R(1,2)|=1");
  }
  Vec3 e;
  e(0) = std::asin(r(1, 2));
  e(1) = std::atan2(-r(0, 2), r(2, 2));
  e(2) = std::atan2(-r(1, 0), r(1, 1));
  return e;
}

// Exact SO(3) exponential (axis-angle / Rodrigues). Used for gyro integration,
// where the physical angular rate obeys Rdot = R [w]_x; the 3-1-2 chart above
// is only the tangent parameterization for beliefs.
inline Mat3 so3_exp(const Vec3& w) {
  const double th = w.norm();
  if (th < 1e-12) {
    const Mat3 s = skew(w);
    return Mat3::Identity() + s + 0.5 * s * s;
  }
  const Vec3 a = w / th;
  const Mat3 s = skew(a);
  return Mat3::Identity() + std::sin(th) * s + (1.0 - std::cos(th)) * s * s;
}

// Residual form so3_exp(w) - I, formed from small quantities only (no
// cancellation against the identity). Used where eps-level absolute noise in
// near-identity products would be amplified, e.g. by scaled-UT weights.
inline Mat3 so3_exp_residual(const Vec3& w) {
  const double th = w.norm();
  const Mat3 s = skew(w);
  if (th < 1e-12) {
    return s + 0.5 * s * s;
  }
  const double sh = std::sin(0.5 * th);
  const double a = std::sin(th) / th;
  const double b = 2.0 * sh * sh / (th * th);  // (1 - cos th) / th^2
  return a * s + b * s * s;
}

// Residual form exp_map(e) - I for the 3-1-2 chart; diagonal entries use
// cos(x) - 1 = -2 sin^2(x/2) to avoid cancellation.
inline Mat3 exp_map_residual(const Vec3& e) {
  const double cp = std::cos(e(0)), sp = std::sin(e(0));
  const double ct = std::cos(e(1)), st = std::sin(e(1));
  const double cs = std::cos(e(2)), ss = std::sin(e(2));
  auto cm1 = [](double x) {
    const double s = std::sin(0.5 * x);
    return -2.0 * s * s;
  };
  const double cpm1 = cm1(e(0)), ctm1 = cm1(e(1)), csm1 = cm1(e(2));
  Mat3 r;
  r(0, 0) = csm1 + ctm1 + csm1 * ctm1 - sp * ss * st;
  r(0, 1) = ct * ss + cs * sp * st;
  r(0, 2) = -cp * st;
  r(1, 0) = -cp * ss;
  r(1, 1) = cpm1 + csm1 + cpm1 * csm1;
  r(1, 2) = sp;
  r(2, 0) = cs * st + ct * sp * ss;
  r(2, 1) = ss * st - cs * ct * sp;
  r(2, 2) = cpm1 + ctm1 + cpm1 * ctm1;
  return r;
}

inline Vec3 so3_log(const Mat3& r) {
  const double c = std::min(1.0, std::max(-1.0, (r.trace() - 1.0) * 0.5));
  const double th = std::acos(c);
  if (th < 1e-10) {
    return Vec3(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)) * 0.5;
  }
  if (th > M_PI - 1e-6) {
    // Near pi: axis from the symmetric part.
    Mat3 k = (r + Mat3::Identity()) * 0.5;
    Vec3 a(std::sqrt(std::max(0.0, k(0, 0))), std::sqrt(std::max(0.0, k(1, 1))),
           std::sqrt(std::max(0.0, k(2, 2))));
    int imax = 0;
    a.maxCoeff(&imax);
    if (r((imax + 1) % 3, imax) + r(imax, (imax + 1) % 3) < 0) a((imax + 1) % 3) *= -1;
    if (r((imax + 2) % 3, imax) + r(imax, (imax + 2) % 3) < 0) a((imax + 2) % 3) *= -1;
    return th * a.normalized();
  }
  return th / (2.0 * std::sin(th)) *
         Vec3(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
}

// One step of the iterative polar projection; keeps R in SO(3) against
// round-off accumulation during long propagation runs.
inline void reorthonormalize(Mat3& r) {
  r = r * (1.5 * Mat3::Identity() - 0.5 * (r.transpose() * r));
}

struct NavState {
  Vec3 r_w = Vec3::Zero();     // IMU origin position, world frame [m]
  Vec3 v_w = Vec3::Zero();     // velocity, world frame [m/s]
  Mat3 R_wb = Mat3::Identity();  // body-to-world rotation
  Vec3 b_a = Vec3::Zero();     // accelerometer bias [m/s^2]
  Vec3 b_g = Vec3::Zero();     // gyro bias [rad/s]

  bool rotation_valid(double tol = 1e-9) const {
    return (R_wb * R_wb.transpose() - Mat3::Identity()).norm() < tol &&
           std::abs(R_wb.determinant() - 1.0) < tol;
  }
  bool finite() const {
    return r_w.allFinite() && v_w.allFinite() && R_wb.allFinite() &&
           b_a.allFinite() && b_g.allFinite();
  }
};

// delta layout: [dr(3), dv(3), dtheta(3), db_a(3), db_g(3)]
inline NavState oplus(const NavState& x, const Vec15& d) {
  NavState y;
  y.r_w = x.r_w + d.segment<3>(0);
  y.v_w = x.v_w + d.segment<3>(3);
  y.R_wb = x.R_wb * exp_map(d.segment<3>(6));
  y.b_a = x.b_a + d.segment<3>(9);
  y.b_g = x.b_g + d.segment<3>(12);
  return y;
}

inline Vec15 ominus(const NavState& xj, const NavState& xk) {
  Vec15 d;
  d.segment<3>(0) = xj.r_w - xk.r_w;
  d.segment<3>(3) = xj.v_w - xk.v_w;
  d.segment<3>(6) = log_map(xk.R_wb.transpose() * xj.R_wb);
  d.segment<3>(9) = xj.b_a - xk.b_a;
  d.segment<3>(12) = xj.b_g - xk.b_g;
  return d;
}

struct Belief {
  NavState mean;
  Mat15 cov = Mat15::Zero();

  void symmetrize_cov() { symmetrize(cov); }
};

}  // namespace tcnav
