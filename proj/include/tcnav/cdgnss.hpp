#pragma once

// Double-difference CDGNSS measurement model for a dual-antenna rover against
// a fixed reference antenna at the world origin.
//
// Conventions, fixed for the whole library:
//  * Baseline 1 connects reference -> primary antenna, baseline 2 connects
//    primary -> secondary.
//  * Single differences take (far antenna - near antenna): ref - pri for
//    baseline 1, pri - sec for baseline 2; double differences take
//    (pivot - non-pivot). This matches geometry rows (e_pivot - e_j)^T acting
//    on the baseline vectors b1 = r_pri - r_ref, b2 = r_sec - r_pri.
//  * Measurement stack layout: [rho_1; phi_1; rho_2; phi_2], bands
//    concatenated in order inside each baseline.

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "tcnav/core.hpp"
#include "tcnav/manifold.hpp"
#include "tcnav/ut.hpp"

namespace tcnav {

struct AntennaGeometry {
  Vec3 r_b_u = Vec3(-0.25, 0.30, -0.15);  // IMU origin, body frame [m]
  Vec3 r_b_p = Vec3::Zero();              // primary antenna (body origin)
  Vec3 r_b_s = Vec3(1.0668, 0.0, 0.0);    // secondary antenna [m]

  double baseline_length() const { return (r_b_s - r_b_p).norm(); }
};

struct Channel {
  int sat_id = 0;
  Vec3 e_w = Vec3::UnitZ();  // unit vector antenna -> satellite, world frame
  double elevation = M_PI / 2;  // rad
  double cn0 = 45.0;            // dB-Hz
  double plock = 1.0;           // phase lock statistic in [0,1]
};

// One frequency on one baseline: a pivot plus >=1 non-pivot channels.
struct Band {
  int freq_id = 0;
  double wavelength = kLambdaL1;  // m
  Channel pivot;
  std::vector<Channel> sats;
};

struct BaselineSet {
  std::vector<Band> bands;

  int n_channels() const {
    int n = 0;
    for (const auto& b : bands) n += static_cast<int>(b.sats.size());
    return n;
  }
};

struct SatelliteSet {
  BaselineSet baseline1;
  BaselineSet baseline2;

  int n1() const { return baseline1.n_channels(); }
  int n2() const { return baseline2.n_channels(); }
  int n_total() const { return n1() + n2(); }
};

struct NoiseModelParams {
  double sigma_rho = 1.5;    // undifferenced zenith pseudorange std [m]
  double sigma_phi = 0.006;  // undifferenced zenith phase std [m]
  enum class ElevationWeighting { kInvSin, kConstant } weighting =
      ElevationWeighting::kInvSin;
};

// One GNSS epoch's double-difference observables for both baselines.
struct DdEpoch {
  double t = 0.0;
  SatelliteSet sats;
  VecX z;        // [rho1; phi1; rho2; phi2], meters
  MatX sigma_g;  // 2N x 2N measurement noise covariance

  bool empty() const { return sats.n_total() == 0; }
};

struct LinearizedBaselines {
  Vec6 b_bar = Vec6::Zero();
  Mat6x15 h_b = Mat6x15::Zero();
  Mat6 sigma_b = Mat6::Zero();
};

// b(x) = [r_w + R(r_p - r_u); R(r_s - r_p)]. The second block depends on
// attitude only, so |b2| is invariant: the known baseline length acts as an
// implicit constraint on ambiguity resolution.
inline Vec6 baseline_function(const NavState& x, const AntennaGeometry& g) {
  Vec6 b;
  b.head<3>() = x.r_w + x.R_wb * (g.r_b_p - g.r_b_u);
  b.tail<3>() = x.R_wb * (g.r_b_s - g.r_b_p);
  return b;
}

// Rows (e_pivot - e_j)^T, bands stacked. Satellite-to-antenna unit vectors are
// treated as common to all antennas (short-baseline small-angle assumption).
inline MatX geometry_matrix(const BaselineSet& bl) {
  const int n = bl.n_channels();
  MatX g(n, 3);
  int r = 0;
  for (const auto& band : bl.bands) {
    if (band.sats.empty()) {
      throw ConfigError("geometry_matrix: band with empty satellite list");
    }
    for (const auto& ch : band.sats) {
      g.row(r++) = (band.pivot.e_w - ch.e_w).transpose();
    }
  }
  return g;
}

inline VecX wavelength_diag(const BaselineSet& bl) {
  VecX lam(bl.n_channels());
  int r = 0;
  for (const auto& band : bl.bands) {
    for (size_t i = 0; i < band.sats.size(); ++i) lam(r++) = band.wavelength;
  }
  return lam;
}

// Predicted [rho1; phi1; rho2; phi2] for baseline stack b and integers n.
inline VecX dd_predict(const Vec6& b, const VecXi& n, const SatelliteSet& sats) {
  const int n1 = sats.n1(), n2 = sats.n2();
  if (n.size() != n1 + n2) throw ConfigError("dd_predict: ambiguity size mismatch");
  VecX z(2 * (n1 + n2));
  int row = 0;
  if (n1 > 0) {
    const MatX g1 = geometry_matrix(sats.baseline1);
    const VecX lam1 = wavelength_diag(sats.baseline1);
    const VecX r1 = g1 * b.head<3>();
    z.segment(row, n1) = r1;
    row += n1;
    z.segment(row, n1) = r1 + lam1.cwiseProduct(n.head(n1).cast<double>());
    row += n1;
  }
  if (n2 > 0) {
    const MatX g2 = geometry_matrix(sats.baseline2);
    const VecX lam2 = wavelength_diag(sats.baseline2);
    const VecX r2 = g2 * b.tail<3>();
    z.segment(row, n2) = r2;
    row += n2;
    z.segment(row, n2) = r2 + lam2.cwiseProduct(n.tail(n2).cast<double>());
  }
  return z;
}

namespace detail {

// Index map for undifferenced observables over (antenna, sat, freq).
// Antennas: 0 = reference, 1 = primary, 2 = secondary.
class UdIndex {
 public:
  int at(int ant, int sat, int freq) {
    const auto key = std::make_tuple(ant, sat, freq);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    const int idx = static_cast<int>(map_.size());
    map_.emplace(key, idx);
    inv_sin2_.push_back(0.0);
    return idx;
  }
  int size() const { return static_cast<int>(map_.size()); }
  std::vector<double> inv_sin2_;  // elevation weight per entry

 private:
  std::map<std::tuple<int, int, int>, int> map_;
};

inline double elevation_weight(double el, NoiseModelParams::ElevationWeighting w) {
  if (el <= 0.0 || el > M_PI / 2 + 1e-9) {
    throw ConfigError("dd_noise_covariance: elevation outside (0, pi/2]");
  }
  if (w == NoiseModelParams::ElevationWeighting::kConstant) return 1.0;
  const double s = std::sin(el);
  return 1.0 / (s * s);
}

// Double-difference mapping D over undifferenced observables, one observable
// type at a time (the same D serves pseudorange and phase).
inline MatX dd_mapping(const SatelliteSet& sats, NoiseModelParams::ElevationWeighting w,
                       UdIndex& idx) {
  const int n = sats.n_total();
  struct Entry {
    int row, col;
    double v;
  };
  std::vector<Entry> entries;
  int row = 0;
  auto add_baseline = [&](const BaselineSet& bl, int ant_far, int ant_near) {
    for (const auto& band : bl.bands) {
      const int ip_far = idx.at(ant_far, band.pivot.sat_id, band.freq_id);
      const int ip_near = idx.at(ant_near, band.pivot.sat_id, band.freq_id);
      idx.inv_sin2_[ip_far] = idx.inv_sin2_[ip_near] =
          elevation_weight(band.pivot.elevation, w);
      for (const auto& ch : band.sats) {
        const int ij_far = idx.at(ant_far, ch.sat_id, band.freq_id);
        const int ij_near = idx.at(ant_near, ch.sat_id, band.freq_id);
        idx.inv_sin2_[ij_far] = idx.inv_sin2_[ij_near] =
            elevation_weight(ch.elevation, w);
        // DD = (u_far^pivot - u_near^pivot) - (u_far^j - u_near^j)
        entries.push_back({row, ip_far, 1.0});
        entries.push_back({row, ip_near, -1.0});
        entries.push_back({row, ij_far, -1.0});
        entries.push_back({row, ij_near, 1.0});
        ++row;
      }
    }
  };
  add_baseline(sats.baseline1, 0, 1);
  add_baseline(sats.baseline2, 1, 2);
  MatX d = MatX::Zero(n, idx.size());
  for (const auto& e : entries) d(e.row, e.col) += e.v;
  return d;
}

}  // namespace detail

// Full measurement noise covariance over [rho1; phi1; rho2; phi2].
// Off-diagonal (baseline 1, baseline 2) blocks are nonzero through the shared
// primary antenna. Pseudorange and phase noise are independent.
inline MatX dd_noise_covariance(const SatelliteSet& sats, const NoiseModelParams& p) {
  const int n1 = sats.n1(), n2 = sats.n2(), n = n1 + n2;
  detail::UdIndex idx;
  const MatX d = detail::dd_mapping(sats, p.weighting, idx);
  VecX wdiag(idx.size());
  for (int i = 0; i < idx.size(); ++i) wdiag(i) = idx.inv_sin2_[i];
  const MatX m = d * wdiag.asDiagonal() * d.transpose();  // unit-variance DD cov

  MatX sigma = MatX::Zero(2 * n, 2 * n);
  // Row index of DD channel i (within the [rho|phi] interleaved layout).
  auto scatter = [&](double s2, int offset_kind) {
    for (int i = 0; i < n; ++i) {
      const int ri = (i < n1) ? (i + offset_kind * n1)
                              : (2 * n1 + (i - n1) + offset_kind * n2);
      for (int j = 0; j < n; ++j) {
        const int rj = (j < n1) ? (j + offset_kind * n1)
                                : (2 * n1 + (j - n1) + offset_kind * n2);
        sigma(ri, rj) = s2 * m(i, j);
      }
    }
  };
  scatter(p.sigma_rho * p.sigma_rho, 0);
  scatter(p.sigma_phi * p.sigma_phi, 1);
  return sigma;
}

// First-order (Taylor) linearization of b(x) about the belief mean.
// The attitude columns follow the 3-1-2 tangent chart, for which
// exp_map(d) = I - [d]_x + O(d^2), giving d(R exp_map(d) l)/dd = R [l]_x.
inline LinearizedBaselines linearize_ekf(const Belief& belief,
                                         const AntennaGeometry& g) {
  LinearizedBaselines lin;
  lin.b_bar = baseline_function(belief.mean, g);
  lin.h_b.setZero();
  lin.h_b.block<3, 3>(0, 0) = Mat3::Identity();
  lin.h_b.block<3, 3>(0, 6) = belief.mean.R_wb * skew(g.r_b_p - g.r_b_u);
  lin.h_b.block<3, 3>(3, 6) = belief.mean.R_wb * skew(g.r_b_s - g.r_b_p);
  lin.sigma_b.setZero();
  return lin;
}

// Statistical (unscented) linearization: fits the joint Gaussian over
// (x, b(x)) and reports the extra baseline uncertainty sigma_b not explained
// by the linear model.
inline LinearizedBaselines linearize_ukf(const Belief& belief,
                                         const AntennaGeometry& g) {
  UtJoint j = unscented_joint(
      belief, [&](const NavState& x) -> VecX { return baseline_function(x, g); }, 6);
  LinearizedBaselines lin;
  lin.b_bar = j.y_mean;
  const MatX h = j.p_xx.ldlt().solve(j.p_xy).transpose();
  lin.h_b = h;
  lin.sigma_b = clamp_psd(j.p_yy - h * j.p_xx * h.transpose());
  return lin;
}

}  // namespace tcnav
