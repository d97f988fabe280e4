#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace tcnav {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using Vec15 = Eigen::Matrix<double, 15, 1>;
using VecX = Eigen::VectorXd;
using VecXi = Eigen::VectorXi;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat15 = Eigen::Matrix<double, 15, 15>;
using Mat6x15 = Eigen::Matrix<double, 6, 15>;
using MatX = Eigen::MatrixXd;

inline constexpr int kStateDof = 15;   // r, v, attitude, b_a, b_g
inline constexpr int kNoiseDof = 12;   // v_a, v_g, v_a2, v_g2

inline constexpr double kSpeedOfLight = 299792458.0;      // m/s
inline constexpr double kGpsL1Hz = 1575.42e6;
inline constexpr double kGpsL2Hz = 1227.60e6;
inline constexpr double kLambdaL1 = kSpeedOfLight / kGpsL1Hz;
inline constexpr double kLambdaL2 = kSpeedOfLight / kGpsL2Hz;
inline constexpr double kEarthRateRadS = 7.292115e-5;
inline constexpr double kStdGravity = 9.80665;            // m/s^2

// Attitude tangent chart hits the 3-1-2 gimbal condition.
class SingularAttitudeError : public std::runtime_error {
 public:
  explicit SingularAttitudeError(const std::string& what)
      : std::runtime_error(what) {}
};

// Cholesky/QR breakdown, non-PD covariance after jitter, etc.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline Mat3 skew(const Vec3& a) {
  Mat3 s;
  s << 0.0, -a.z(), a.y(),
       a.z(), 0.0, -a.x(),
      -a.y(), a.x(), 0.0;
  return s;
}

// P <- (P + P^T)/2. QR/UT arithmetic drifts symmetry; applied after every
// covariance-producing step.
template <typename Derived>
void symmetrize(Eigen::MatrixBase<Derived>& p) {
  p = ((p + p.transpose()) * 0.5).eval();
}

}  // namespace tcnav
