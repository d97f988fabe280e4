#pragma once

// Deterministic, seedable synthesis of truth trajectories, IMU streams and DD
// observable epochs, plus the attitude-uncertainty Monte Carlo study of the
// linearization schemes. All randomness flows through counter-based (seed,
// stream) substreams, so outputs are bit-reproducible and independent of
// thread scheduling.

#include <array>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "tcnav/ambiguity.hpp"
#include "tcnav/cdgnss.hpp"
#include "tcnav/ins.hpp"
#include "tcnav/rng.hpp"
#include "tcnav/sqrt_update.hpp"

namespace tcnav {

// ---------------------------------------------------------------------------
// Scenario specification
// ---------------------------------------------------------------------------

struct TrajectorySpec {
  enum class Type { kStatic, kCircle, kSegments } type = Type::kStatic;
  // kCircle
  double radius = 50.0;  // m
  double speed = 10.0;   // m/s
  // kSegments: piecewise-constant longitudinal acceleration and yaw rate
  struct Segment {
    double duration = 1.0;   // s
    double accel = 0.0;      // m/s^2, along vehicle forward axis
    double yaw_rate = 0.0;   // rad/s, about +z
  };
  std::vector<Segment> segments;
  double initial_speed = 0.0;
  double initial_heading = 0.0;  // rad; velocity direction (cos h, sin h, 0)
  Vec3 initial_position = Vec3::Zero();
};

struct ConstellationSpec {
  int n_sats = 8;
  std::vector<double> azimuths_deg;    // defaults to 0, 45, ..., 315
  std::vector<double> elevations_deg;  // defaults to a fixed 15..75 deg set
  double mask_deg = 15.0;
  bool use_l1 = true;
  bool use_l2 = false;
  double cn0 = 45.0;
  double plock = 0.95;
};

struct FaultSpec {
  enum class Type {
    kPseudorangeBias,  // undifferenced bias at the primary antenna
    kMultipath,        // pseudorange + phase corruption of one satellite
    kPhaseShift,       // baseline-1 phases move by G1 * position_shift
    kCycleSlip,        // integer-cycle offset on one satellite's phases
    kOutage            // all channels lost
  } type = Type::kPseudorangeBias;
  double t_start = 0.0;
  double t_end = 0.0;
  int sat_id = -1;
  double rho_bias = 0.0;    // m
  double phase_bias = 0.0;  // m (kMultipath)
  Vec3 position_shift = Vec3::Zero();
  int cycles = 0;
};

struct InitSpec {
  double pos_sigma = 1.0;        // m
  double vel_sigma = 0.3;        // m/s
  double rp_sigma_deg = 0.5;     // pitch/roll, deg
  double yaw_sigma_deg = 1.5;    // deg
  double accel_bias_sigma = 5e-3;  // m/s^2
  double gyro_bias_sigma = 5e-5;   // rad/s
};

struct Scenario {
  TrajectorySpec trajectory;
  ConstellationSpec constellation;
  ImuParams imu;
  NoiseModelParams noise;                     // model advertised to the filter
  std::optional<NoiseModelParams> gen_noise;  // actual generation noise
  AntennaGeometry geometry;
  std::vector<FaultSpec> faults;
  InitSpec init;
  double duration = 60.0;   // s
  double gnss_rate = 5.0;   // Hz
  std::uint64_t seed = 1;
};

// RNG stream ids (offsets keep scenario substreams disjoint).
inline constexpr std::uint64_t kStreamImu = 0x100;
inline constexpr std::uint64_t kStreamDd = 0x200;
inline constexpr std::uint64_t kStreamInit = 0x300;
inline constexpr std::uint64_t kStreamMc = 0x10000;

// ---------------------------------------------------------------------------
// Truth synthesis
// ---------------------------------------------------------------------------

// Kinematically consistent truth at IMU rate: the generator uses the same
// zero-order-hold discretization as the filter dynamics (position gains
// v dt + a dt^2 / 2 per step), so a noise-free filter reproduces it exactly.
inline std::vector<NavState> synth_truth(const Scenario& sc) {
  const double dt = sc.imu.dt;
  const int n = static_cast<int>(std::llround(sc.duration / dt)) + 1;
  std::vector<NavState> out;
  out.reserve(n);

  const TrajectorySpec& tr = sc.trajectory;
  NavState x;
  x.r_w = tr.initial_position;

  auto heading_rot = [](double h) { return so3_exp(Vec3(0, 0, h)); };

  double speed = tr.initial_speed;
  double heading = tr.initial_heading;
  std::vector<TrajectorySpec::Segment> segs = tr.segments;
  if (tr.type == TrajectorySpec::Type::kStatic) {
    speed = 0.0;
    segs = {{sc.duration + dt, 0.0, 0.0}};
  } else if (tr.type == TrajectorySpec::Type::kCircle) {
    speed = tr.speed;
    segs = {{sc.duration + dt, 0.0, tr.speed / tr.radius}};
  } else if (segs.empty()) {
    throw ConfigError("synth_truth: segment trajectory without segments");
  }

  x.R_wb = heading_rot(heading);
  x.v_w = x.R_wb * Vec3(speed, 0, 0);

  size_t seg_idx = 0;
  double seg_left = segs[0].duration;
  for (int k = 0; k < n; ++k) {
    out.push_back(x);
    while (seg_left <= 0.0 && seg_idx + 1 < segs.size()) {
      ++seg_idx;
      seg_left = segs[seg_idx].duration;
    }
    const auto& seg = segs[seg_idx];
    seg_left -= dt;
    const Vec3 omega_b(0, 0, seg.yaw_rate);
    // Advance speed along track, then rotate the velocity exactly; the
    // implied a_w = dv/dt keeps the step consistent with the filter's
    // zero-order-hold kinematics while holding |v| exact on circles.
    speed = std::max(0.0, speed + seg.accel * dt);
    const Mat3 r_next = x.R_wb * so3_exp(omega_b * dt);
    const Vec3 v_next = r_next * Vec3(speed, 0, 0);
    const Vec3 a_w = (v_next - x.v_w) / dt;
    x.r_w += x.v_w * dt + 0.5 * a_w * dt * dt;
    x.v_w = v_next;
    x.R_wb = r_next;
    reorthonormalize(x.R_wb);
  }
  return out;
}

// ---------------------------------------------------------------------------
// IMU synthesis
// ---------------------------------------------------------------------------

struct ImuSynthesis {
  std::vector<ImuSample> samples;  // one per truth interval [k, k+1)
  std::vector<Vec3> bias_a;        // true biases at each sample
  std::vector<Vec3> bias_g;
};

// Inverts the measurement model along the truth with OU biases (exact
// discretization, stationary initialization) and white noise.
inline ImuSynthesis synth_imu(const std::vector<NavState>& truth,
                              const ImuParams& p, std::uint64_t seed) {
  ImuSynthesis out;
  if (truth.size() < 2) return out;
  Rng rng(seed, kStreamImu);
  const double dt = p.dt;
  const double aa = std::exp(-dt / p.tau_a), ag = std::exp(-dt / p.tau_g);
  const double wa = p.sigma_ba * std::sqrt(1.0 - aa * aa);
  const double wg = p.sigma_bg * std::sqrt(1.0 - ag * ag);
  const double na = p.accel_noise_density / std::sqrt(dt);
  const double ng = p.gyro_noise_density / std::sqrt(dt);

  Vec3 ba = p.sigma_ba * rng.normal_vec3();
  Vec3 bg = p.sigma_bg * rng.normal_vec3();
  out.samples.reserve(truth.size() - 1);
  for (size_t k = 0; k + 1 < truth.size(); ++k) {
    const NavState& x0 = truth[k];
    const NavState& x1 = truth[k + 1];
    const Vec3 a_w = (x1.v_w - x0.v_w) / dt;
    const Vec3 omega_b = so3_log(x0.R_wb.transpose() * x1.R_wb) / dt;
    ImuSample u;
    u.t = k * dt;
    u.f_u = p.R_bu.transpose() * (x0.R_wb.transpose() * (a_w - p.g_w)) + ba +
            na * rng.normal_vec3();
    u.omega_u = p.R_bu.transpose() * omega_b +
                p.R_bu.transpose() * (x0.R_wb.transpose() * p.omega_earth_w) + bg +
                ng * rng.normal_vec3();
    out.samples.push_back(u);
    out.bias_a.push_back(ba);
    out.bias_g.push_back(bg);
    ba = aa * ba + wa * rng.normal_vec3();
    bg = ag * bg + wg * rng.normal_vec3();
  }
  return out;
}

// ---------------------------------------------------------------------------
// DD observable synthesis
// ---------------------------------------------------------------------------

inline Vec3 az_el_unit(double az_deg, double el_deg) {
  const double az = az_deg * M_PI / 180.0, el = el_deg * M_PI / 180.0;
  return Vec3(std::cos(el) * std::sin(az), std::cos(el) * std::cos(az),
              std::sin(el));
}

// Static snapshot constellation; the pivot is the highest-elevation
// satellite. Satellites below the mask are not generated.
inline SatelliteSet build_constellation(const ConstellationSpec& cs) {
  std::vector<double> az = cs.azimuths_deg;
  std::vector<double> el = cs.elevations_deg;
  if (az.empty()) {
    for (int i = 0; i < cs.n_sats; ++i) az.push_back(45.0 * (i % 8));
  }
  if (el.empty()) {
    static const double defaults[] = {70, 25, 55, 15, 40, 65, 20, 45, 30, 60};
    for (int i = 0; i < cs.n_sats; ++i) el.push_back(defaults[i % 10]);
  }
  if (static_cast<int>(az.size()) < cs.n_sats ||
      static_cast<int>(el.size()) < cs.n_sats) {
    throw ConfigError("constellation: azimuth/elevation lists shorter than n_sats");
  }
  int pivot = 0;
  for (int i = 1; i < cs.n_sats; ++i) {
    if (el[i] > el[pivot]) pivot = i;
  }
  auto make_band = [&](int freq_id, double lambda) {
    Band b;
    b.freq_id = freq_id;
    b.wavelength = lambda;
    b.pivot.sat_id = pivot + 1;
    b.pivot.e_w = az_el_unit(az[pivot], el[pivot]);
    b.pivot.elevation = el[pivot] * M_PI / 180.0;
    b.pivot.cn0 = cs.cn0;
    b.pivot.plock = cs.plock;
    for (int i = 0; i < cs.n_sats; ++i) {
      if (i == pivot || el[i] < cs.mask_deg) continue;
      Channel c;
      c.sat_id = i + 1;
      c.e_w = az_el_unit(az[i], el[i]);
      c.elevation = el[i] * M_PI / 180.0;
      c.cn0 = cs.cn0;
      c.plock = cs.plock;
      b.sats.push_back(c);
    }
    return b;
  };
  SatelliteSet s;
  for (int bl = 0; bl < 2; ++bl) {
    BaselineSet& set = bl == 0 ? s.baseline1 : s.baseline2;
    if (cs.use_l1) set.bands.push_back(make_band(0, kLambdaL1));
    if (cs.use_l2) set.bands.push_back(make_band(1, kLambdaL2));
  }
  return s;
}

namespace detail {

inline void apply_fault(DdEpoch& e, const FaultSpec& f, double t) {
  if (t < f.t_start || t >= f.t_end) return;
  const int n1 = e.sats.n1(), n2 = e.sats.n2();
  switch (f.type) {
    case FaultSpec::Type::kPseudorangeBias:
    case FaultSpec::Type::kMultipath: {
      const double phase = f.type == FaultSpec::Type::kMultipath ? f.phase_bias : 0.0;
      int c = 0;
      for (const auto& band : e.sats.baseline1.bands) {
        for (const auto& ch : band.sats) {
          if (ch.sat_id == f.sat_id) {
            e.z(c) += f.rho_bias;
            e.z(n1 + c) += phase;
          }
          ++c;
        }
      }
      c = 0;
      for (const auto& band : e.sats.baseline2.bands) {
        for (const auto& ch : band.sats) {
          if (ch.sat_id == f.sat_id) {
            e.z(2 * n1 + c) -= f.rho_bias;
            e.z(2 * n1 + n2 + c) -= phase;
          }
          ++c;
        }
      }
      break;
    }
    case FaultSpec::Type::kPhaseShift: {
      if (n1 > 0) {
        const MatX g1 = geometry_matrix(e.sats.baseline1);
        e.z.segment(n1, n1) += g1 * f.position_shift;
      }
      break;
    }
    case FaultSpec::Type::kCycleSlip: {
      int c = 0;
      for (const auto& band : e.sats.baseline1.bands) {
        for (const auto& ch : band.sats) {
          if (f.sat_id < 0 || ch.sat_id == f.sat_id)
            e.z(n1 + c) += f.cycles * band.wavelength;
          ++c;
        }
      }
      c = 0;
      for (const auto& band : e.sats.baseline2.bands) {
        for (const auto& ch : band.sats) {
          if (f.sat_id < 0 || ch.sat_id == f.sat_id)
            e.z(2 * n1 + n2 + c) += f.cycles * band.wavelength;
          ++c;
        }
      }
      break;
    }
    case FaultSpec::Type::kOutage: {
      e.sats = SatelliteSet{};
      e.z = VecX(0);
      e.sigma_g = MatX(0, 0);
      break;
    }
  }
}

}  // namespace detail

// One epoch of DD observables at truth state x: integers redrawn every epoch
// (the single-epoch cycle-slip posture), correlated noise drawn through the
// exact covariance factor, faults applied afterward.
inline DdEpoch synth_dd_epoch(const NavState& x, double t, const Scenario& sc,
                              const SatelliteSet& sats, Rng& rng,
                              VecXi* n_true_out = nullptr) {
  DdEpoch e;
  e.t = t;
  e.sats = sats;
  const int n = sats.n_total();
  if (n == 0) {
    e.z = VecX(0);
    e.sigma_g = MatX(0, 0);
    return e;
  }
  e.sigma_g = dd_noise_covariance(sats, sc.noise);
  const MatX sigma_gen = sc.gen_noise
                             ? dd_noise_covariance(sats, *sc.gen_noise)
                             : e.sigma_g;
  VecXi n_true(n);
  for (int i = 0; i < n; ++i) n_true(i) = rng.uniform_int(-50, 50);
  if (n_true_out) *n_true_out = n_true;
  Eigen::LLT<MatX> llt(sigma_gen);
  e.z = dd_predict(baseline_function(x, sc.geometry), n_true, sats) +
        MatX(llt.matrixL()) * rng.normal_vec(2 * n);
  for (const auto& f : sc.faults) detail::apply_fault(e, f, t);
  return e;
}

// Full epoch stream for a scenario (truth must be at IMU rate).
inline std::vector<DdEpoch> synth_dd(const std::vector<NavState>& truth,
                                     const Scenario& sc) {
  std::vector<DdEpoch> out;
  const SatelliteSet sats = build_constellation(sc.constellation);
  Rng rng(sc.seed, kStreamDd);
  const int stride =
      std::max(1, static_cast<int>(std::llround(1.0 / (sc.gnss_rate * sc.imu.dt))));
  for (size_t k = stride; k < truth.size(); k += stride) {
    const double t = k * sc.imu.dt;
    out.push_back(synth_dd_epoch(truth[k], t, sc, sats, rng));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linearization Monte Carlo study
// ---------------------------------------------------------------------------

enum class McMethod { kUkf, kEkf, kUnconstrained };

inline const char* to_string(McMethod m) {
  switch (m) {
    case McMethod::kUkf: return "ukf";
    case McMethod::kEkf: return "ekf";
    case McMethod::kUnconstrained: return "unconstrained";
  }
  return "?";
}

struct MonteCarloSpec {
  std::vector<double> yaw_sigmas_deg{0.5, 2, 8, 15, 30, 60, 90};
  double rp_sigma_deg = 2.0;
  int trials = 10000;
  double pf = 0.01;
  // Converged-filter position prior: the study isolates attitude
  // uncertainty, so the position-side ambiguities stay strong.
  double pos_sigma = 0.1;
  double unconstrained_sigma = 100.0;   // diffuse baseline prior
  std::vector<McMethod> methods{McMethod::kUkf, McMethod::kEkf,
                                McMethod::kUnconstrained};
  ConstellationSpec constellation;      // default: 8 satellites, L1
  AntennaGeometry geometry;
  NoiseModelParams noise;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct McRow {
  double yaw_sigma_deg = 0.0;
  McMethod method = McMethod::kUkf;
  long n_success = 0, n_fail = 0, n_float = 0;
  long trials = 0;
  double p_success() const { return static_cast<double>(n_success) / trials; }
  double p_fail() const { return static_cast<double>(n_fail) / trials; }
  double p_float() const { return static_cast<double>(n_float) / trials; }
};

namespace detail {

enum class TrialOutcome { kSuccess, kFail, kFloat };

inline TrialOutcome mc_trial(const MonteCarloSpec& spec, const SatelliteSet& sats,
                             McMethod method, double yaw_sigma_rad, Rng& rng,
                             const ApertureThresholdTable& table) {
  // Prior over the full state.
  Belief prior;
  prior.cov.setZero();
  prior.cov.block<3, 3>(0, 0) = spec.pos_sigma * spec.pos_sigma * Mat3::Identity();
  prior.cov.block<3, 3>(3, 3) = 0.01 * Mat3::Identity();
  const double rp = spec.rp_sigma_deg * M_PI / 180.0;
  prior.cov(6, 6) = rp * rp;
  prior.cov(7, 7) = rp * rp;
  prior.cov(8, 8) = yaw_sigma_rad * yaw_sigma_rad;
  prior.cov.block<3, 3>(9, 9) = 1e-6 * Mat3::Identity();
  prior.cov.block<3, 3>(12, 12) = 1e-8 * Mat3::Identity();

  // Truth drawn from the prior; fresh integers; exact correlated noise.
  const MatX l = chol_with_jitter(prior.cov);
  const NavState truth = oplus(prior.mean, Vec15(l * VecX(rng.normal_vec(15))));
  const int n = sats.n_total();
  VecXi n_true(n);
  for (int i = 0; i < n; ++i) n_true(i) = rng.uniform_int(-50, 50);
  const MatX sigma_g = dd_noise_covariance(sats, spec.noise);
  Eigen::LLT<MatX> llt(sigma_g);
  DdEpoch epoch;
  epoch.sats = sats;
  epoch.sigma_g = sigma_g;
  epoch.z = dd_predict(baseline_function(truth, spec.geometry), n_true, sats) +
            MatX(llt.matrixL()) * rng.normal_vec(2 * n);

  DecomposedCost d;
  if (method == McMethod::kUnconstrained) {
    // Solve directly for the two baseline vectors under a diffuse prior.
    const MeasurementGeometry mg = measurement_geometry(sats);
    const Vec6 b0 = baseline_function(prior.mean, spec.geometry);
    const VecX nu = epoch.z - mg.gs * b0;
    const MatX prior_cov =
        spec.unconstrained_sigma * spec.unconstrained_sigma * MatX::Identity(6, 6);
    d = qr_decompose(stack_whitened(prior_cov, nu, mg.gs, mg.h_n, sigma_g));
  } else {
    const LinearizedBaselines lin = method == McMethod::kUkf
                                        ? linearize_ukf(prior, spec.geometry)
                                        : linearize_ekf(prior, spec.geometry);
    d = qr_decompose(build_normalized_system(prior, lin, epoch));
  }
  if (!d.rank_ok) return TrialOutcome::kFloat;
  const IlsSolution sol = ils_search(IlsProblem{d.r_nn, d.nu2}, 2);
  const ApertureDecision ap = aperture_test(sol, d.nn, spec.pf, table);
  if (!ap.accepted) return TrialOutcome::kFloat;
  return (ap.best - n_true).cwiseAbs().maxCoeff() == 0 ? TrialOutcome::kSuccess
                                                       : TrialOutcome::kFail;
}

}  // namespace detail

// Success (validated correct fix), failure (validated false fix) and float
// (failed validation) rates per linearization method and yaw sigma. Each
// trial derives its own RNG substream, so serial and threaded runs agree
// bit-for-bit.
inline std::vector<McRow> run_monte_carlo(
    const MonteCarloSpec& spec,
    const ApertureThresholdTable& table = ApertureThresholdTable::builtin()) {
  std::vector<McRow> rows;
  for (size_t si = 0; si < spec.yaw_sigmas_deg.size(); ++si) {
    for (size_t mi = 0; mi < spec.methods.size(); ++mi) {
      McRow row;
      row.yaw_sigma_deg = spec.yaw_sigmas_deg[si];
      row.method = spec.methods[mi];
      row.trials = spec.trials;
      rows.push_back(row);
    }
  }
  const SatelliteSet sats = build_constellation(spec.constellation);

  auto run_block = [&](McRow& row, size_t row_idx, int t0, int t1,
                       long& ns, long& nf, long& nu) {
    const double ys = row.yaw_sigma_deg * M_PI / 180.0;
    for (int t = t0; t < t1; ++t) {
      Rng rng(spec.seed, kStreamMc + (static_cast<std::uint64_t>(row_idx) << 32) +
                             static_cast<std::uint64_t>(t));
      switch (detail::mc_trial(spec, sats, row.method, ys, rng, table)) {
        case detail::TrialOutcome::kSuccess: ++ns; break;
        case detail::TrialOutcome::kFail: ++nf; break;
        case detail::TrialOutcome::kFloat: ++nu; break;
      }
    }
  };

  for (size_t ri = 0; ri < rows.size(); ++ri) {
    McRow& row = rows[ri];
    const int nthreads = std::max(1, spec.threads);
    if (nthreads == 1) {
      run_block(row, ri, 0, spec.trials, row.n_success, row.n_fail, row.n_float);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::array<long, 3>> acc(nthreads, {0, 0, 0});
      const int chunk = (spec.trials + nthreads - 1) / nthreads;
      for (int th = 0; th < nthreads; ++th) {
        const int t0 = th * chunk;
        const int t1 = std::min(spec.trials, t0 + chunk);
        if (t0 >= t1) break;
        pool.emplace_back([&, th, t0, t1] {
          run_block(row, ri, t0, t1, acc[th][0], acc[th][1], acc[th][2]);
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& a : acc) {
        row.n_success += a[0];
        row.n_fail += a[1];
        row.n_float += a[2];
      }
    }
  }
  return rows;
}

}  // namespace tcnav
