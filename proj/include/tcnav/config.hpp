#pragma once

// Run configuration and scenario files (JSON). Unknown keys are rejected so
// typos fail loudly. Defaults reproduce the baseline configuration table;
// the IMU grade selector switches between the industrial- and consumer-grade
// parameter pairs.

#include <fstream>
#include <set>
#include <string>

#include "json.hpp"
#include "tcnav/filter.hpp"
#include "tcnav/integrity.hpp"
#include "tcnav/sim.hpp"

namespace tcnav {

using Json = nlohmann::json;

struct McConfig {
  std::vector<double> yaw_sigmas_deg{0.5, 2, 8, 15, 30, 60, 90};
  double rp_sigma_deg = 2.0;
  int trials = 10000;
  double pf = 0.01;
  double pos_sigma = 0.1;
  int n_sats = 8;
};

struct RunConfig {
  // CDGNSS channel acceptance and measurement model
  double cn0_threshold = 40.0;      // dB-Hz
  double plock_threshold = 0.8;
  double elevation_mask_deg = 10.0;
  double pf = 0.001;                // IA fixed failure rate
  double sigma_rho = 1.5;           // m
  double sigma_phi = 0.006;         // m
  double outlier_gamma = 1.5;       // sigmas
  int window_length = 10;           // false-fix detection window l
  double pf_psi = 1e-15;            // false-fix detection threshold

  // IMU grade: "industrial" or "consumer"
  std::string imu_grade = "industrial";
  bool ou_exact = false;

  // NHC / ZUPT
  double sigma_nhc_y = 0.1;   // m/s
  double sigma_nhc_z = 0.2;   // m/s
  double p0 = 0.0;            // sideslip polynomial
  double p1 = 0.0;
  double sigma_zx = 0.05;     // m/s
  double sigma_zy = 0.01;
  double sigma_zz = 0.01;
  double gamma_zupt_a = 0.8;  // m/s^2

  // Feature flags
  bool multi_antenna = true;
  bool enable_nhc = true;
  bool enable_zupt = true;
  bool enable_outlier_rejection = true;
  bool enable_reseed = true;
  bool enable_false_fix_detection = true;
  bool use_ukf_linearization = true;
  bool use_l1 = true;
  bool use_l2 = true;

  ReseedCriteria reseed;
  McConfig mc;
  std::uint64_t seed = 1;
  std::string aperture_table_path;  // optional CSV override

  struct Grade {
    double accel_nd, sigma_ba, gyro_nd, sigma_bg, rate_hz;
    double gamma_zupt_g;
    int n_zupt;
    double pf_zupt;
  };
  Grade grade() const {
    if (imu_grade == "industrial") {
      return {100e-6 * kStdGravity, 0.5e-3 * kStdGravity, 0.01 * M_PI / 180.0,
              8.0 * (M_PI / 180.0) / 3600.0, 200.0, 0.006, 10, 1e-30};
    }
    if (imu_grade == "consumer") {
      return {300e-6 * kStdGravity, 10e-3 * kStdGravity, 0.05 * M_PI / 180.0,
              30.0 * (M_PI / 180.0) / 3600.0, 153.0, 0.018, 30, 1e-6};
    }
    throw ConfigError("imu_grade must be 'industrial' or 'consumer'");
  }
};

namespace detail {

inline void check_keys(const Json& j, const std::set<std::string>& allowed,
                       const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
  }
}

template <typename T>
void get_to(const Json& j, const char* key, T& out) {
  if (j.contains(key)) j.at(key).get_to(out);
}

}  // namespace detail

inline RunConfig run_config_from_json(const Json& j) {
  using detail::check_keys;
  using detail::get_to;
  RunConfig c;
  check_keys(j, {"cn0_threshold", "plock_threshold", "elevation_mask_deg", "pf",
                 "sigma_rho", "sigma_phi", "outlier_gamma", "window_length",
                 "pf_psi", "imu_grade", "ou_exact", "sigma_nhc_y", "sigma_nhc_z",
                 "p0", "p1", "sigma_zx", "sigma_zy", "sigma_zz", "gamma_zupt_a",
                 "multi_antenna", "enable_nhc", "enable_zupt",
                 "enable_outlier_rejection", "enable_reseed",
                 "enable_false_fix_detection", "use_ukf_linearization", "use_l1",
                 "use_l2", "reseed", "monte_carlo", "seed", "aperture_table"},
             "config");
  get_to(j, "cn0_threshold", c.cn0_threshold);
  get_to(j, "plock_threshold", c.plock_threshold);
  get_to(j, "elevation_mask_deg", c.elevation_mask_deg);
  get_to(j, "pf", c.pf);
  get_to(j, "sigma_rho", c.sigma_rho);
  get_to(j, "sigma_phi", c.sigma_phi);
  get_to(j, "outlier_gamma", c.outlier_gamma);
  get_to(j, "window_length", c.window_length);
  get_to(j, "pf_psi", c.pf_psi);
  get_to(j, "imu_grade", c.imu_grade);
  get_to(j, "ou_exact", c.ou_exact);
  get_to(j, "sigma_nhc_y", c.sigma_nhc_y);
  get_to(j, "sigma_nhc_z", c.sigma_nhc_z);
  get_to(j, "p0", c.p0);
  get_to(j, "p1", c.p1);
  get_to(j, "sigma_zx", c.sigma_zx);
  get_to(j, "sigma_zy", c.sigma_zy);
  get_to(j, "sigma_zz", c.sigma_zz);
  get_to(j, "gamma_zupt_a", c.gamma_zupt_a);
  get_to(j, "multi_antenna", c.multi_antenna);
  get_to(j, "enable_nhc", c.enable_nhc);
  get_to(j, "enable_zupt", c.enable_zupt);
  get_to(j, "enable_outlier_rejection", c.enable_outlier_rejection);
  get_to(j, "enable_reseed", c.enable_reseed);
  get_to(j, "enable_false_fix_detection", c.enable_false_fix_detection);
  get_to(j, "use_ukf_linearization", c.use_ukf_linearization);
  get_to(j, "use_l1", c.use_l1);
  get_to(j, "use_l2", c.use_l2);
  get_to(j, "seed", c.seed);
  get_to(j, "aperture_table", c.aperture_table_path);
  if (j.contains("reseed")) {
    const Json& r = j.at("reseed");
    check_keys(r, {"max_eps_per_n", "max_psi_ratio", "min_channels",
                   "min_time_since_reset"},
               "config.reseed");
    get_to(r, "max_eps_per_n", c.reseed.max_eps_per_n);
    get_to(r, "max_psi_ratio", c.reseed.max_psi_ratio);
    get_to(r, "min_channels", c.reseed.min_channels);
    get_to(r, "min_time_since_reset", c.reseed.min_time_since_reset);
  }
  if (j.contains("monte_carlo")) {
    const Json& m = j.at("monte_carlo");
    check_keys(m, {"yaw_sigmas_deg", "rp_sigma_deg", "trials", "pf", "pos_sigma",
                   "n_sats"},
               "config.monte_carlo");
    get_to(m, "yaw_sigmas_deg", c.mc.yaw_sigmas_deg);
    get_to(m, "rp_sigma_deg", c.mc.rp_sigma_deg);
    get_to(m, "trials", c.mc.trials);
    get_to(m, "pf", c.mc.pf);
    get_to(m, "pos_sigma", c.mc.pos_sigma);
    get_to(m, "n_sats", c.mc.n_sats);
  }
  if (!(c.sigma_rho > 0) || !(c.sigma_phi > 0) || !(c.pf > 0 && c.pf < 1) ||
      c.window_length < 1) {
    throw ConfigError("config: parameter out of range");
  }
  c.grade();  // validates imu_grade
  return c;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  Json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw ConfigError(path + ": JSON parse error: " + e.what());
  }
  return j;
}

inline RunConfig load_run_config(const std::string& path) {
  return run_config_from_json(load_json_file(path));
}

inline Scenario scenario_from_json(const Json& j) {
  using detail::check_keys;
  using detail::get_to;
  Scenario sc;
  check_keys(j, {"trajectory", "constellation", "faults", "init", "duration",
                 "gnss_rate", "seed", "gen_noise", "geometry"},
             "scenario");
  if (j.contains("trajectory")) {
    const Json& t = j.at("trajectory");
    check_keys(t, {"type", "radius", "speed", "segments", "initial_speed",
                   "initial_heading_deg", "initial_position"},
               "scenario.trajectory");
    std::string type = "static";
    get_to(t, "type", type);
    if (type == "static") {
      sc.trajectory.type = TrajectorySpec::Type::kStatic;
    } else if (type == "circle") {
      sc.trajectory.type = TrajectorySpec::Type::kCircle;
    } else if (type == "segments") {
      sc.trajectory.type = TrajectorySpec::Type::kSegments;
    } else {
      throw ConfigError("trajectory.type must be static|circle|segments");
    }
    get_to(t, "radius", sc.trajectory.radius);
    get_to(t, "speed", sc.trajectory.speed);
    get_to(t, "initial_speed", sc.trajectory.initial_speed);
    if (t.contains("initial_heading_deg")) {
      sc.trajectory.initial_heading =
          t.at("initial_heading_deg").get<double>() * M_PI / 180.0;
    }
    if (t.contains("initial_position")) {
      std::vector<double> p = t.at("initial_position").get<std::vector<double>>();
      if (p.size() != 3) throw ConfigError("initial_position must have 3 entries");
      sc.trajectory.initial_position = Vec3(p[0], p[1], p[2]);
    }
    if (t.contains("segments")) {
      for (const Json& s : t.at("segments")) {
        check_keys(s, {"duration", "accel", "yaw_rate_dps"}, "trajectory.segments[]");
        TrajectorySpec::Segment seg;
        get_to(s, "duration", seg.duration);
        get_to(s, "accel", seg.accel);
        if (s.contains("yaw_rate_dps")) {
          seg.yaw_rate = s.at("yaw_rate_dps").get<double>() * M_PI / 180.0;
        }
        sc.trajectory.segments.push_back(seg);
      }
    }
  }
  if (j.contains("constellation")) {
    const Json& cs = j.at("constellation");
    check_keys(cs, {"n_sats", "azimuths_deg", "elevations_deg", "mask_deg",
                    "use_l1", "use_l2", "cn0", "plock"},
               "scenario.constellation");
    get_to(cs, "n_sats", sc.constellation.n_sats);
    get_to(cs, "azimuths_deg", sc.constellation.azimuths_deg);
    get_to(cs, "elevations_deg", sc.constellation.elevations_deg);
    get_to(cs, "mask_deg", sc.constellation.mask_deg);
    get_to(cs, "use_l1", sc.constellation.use_l1);
    get_to(cs, "use_l2", sc.constellation.use_l2);
    get_to(cs, "cn0", sc.constellation.cn0);
    get_to(cs, "plock", sc.constellation.plock);
  }
  if (j.contains("faults")) {
    for (const Json& f : j.at("faults")) {
      check_keys(f, {"type", "t_start", "t_end", "sat_id", "rho_bias",
                     "phase_bias", "position_shift", "cycles"},
                 "scenario.faults[]");
      FaultSpec fs;
      std::string type;
      get_to(f, "type", type);
      if (type == "pseudorange_bias") {
        fs.type = FaultSpec::Type::kPseudorangeBias;
      } else if (type == "multipath") {
        fs.type = FaultSpec::Type::kMultipath;
      } else if (type == "phase_shift") {
        fs.type = FaultSpec::Type::kPhaseShift;
      } else if (type == "cycle_slip") {
        fs.type = FaultSpec::Type::kCycleSlip;
      } else if (type == "outage") {
        fs.type = FaultSpec::Type::kOutage;
      } else {
        throw ConfigError("faults[].type unknown: " + type);
      }
      get_to(f, "t_start", fs.t_start);
      get_to(f, "t_end", fs.t_end);
      get_to(f, "sat_id", fs.sat_id);
      get_to(f, "rho_bias", fs.rho_bias);
      get_to(f, "phase_bias", fs.phase_bias);
      get_to(f, "cycles", fs.cycles);
      if (f.contains("position_shift")) {
        std::vector<double> p = f.at("position_shift").get<std::vector<double>>();
        if (p.size() != 3) throw ConfigError("position_shift must have 3 entries");
        fs.position_shift = Vec3(p[0], p[1], p[2]);
      }
      sc.faults.push_back(fs);
    }
  }
  if (j.contains("init")) {
    const Json& in = j.at("init");
    check_keys(in, {"pos_sigma", "vel_sigma", "rp_sigma_deg", "yaw_sigma_deg",
                    "accel_bias_sigma", "gyro_bias_sigma"},
               "scenario.init");
    get_to(in, "pos_sigma", sc.init.pos_sigma);
    get_to(in, "vel_sigma", sc.init.vel_sigma);
    get_to(in, "rp_sigma_deg", sc.init.rp_sigma_deg);
    get_to(in, "yaw_sigma_deg", sc.init.yaw_sigma_deg);
    get_to(in, "accel_bias_sigma", sc.init.accel_bias_sigma);
    get_to(in, "gyro_bias_sigma", sc.init.gyro_bias_sigma);
  }
  if (j.contains("gen_noise")) {
    const Json& g = j.at("gen_noise");
    check_keys(g, {"sigma_rho", "sigma_phi"}, "scenario.gen_noise");
    NoiseModelParams gp;
    get_to(g, "sigma_rho", gp.sigma_rho);
    get_to(g, "sigma_phi", gp.sigma_phi);
    sc.gen_noise = gp;
  }
  if (j.contains("geometry")) {
    const Json& g = j.at("geometry");
    check_keys(g, {"r_b_u", "r_b_p", "r_b_s"}, "scenario.geometry");
    auto vec = [&](const char* key, Vec3& out) {
      if (!g.contains(key)) return;
      std::vector<double> p = g.at(key).get<std::vector<double>>();
      if (p.size() != 3) throw ConfigError(std::string(key) + " must have 3 entries");
      out = Vec3(p[0], p[1], p[2]);
    };
    vec("r_b_u", sc.geometry.r_b_u);
    vec("r_b_p", sc.geometry.r_b_p);
    vec("r_b_s", sc.geometry.r_b_s);
  }
  get_to(j, "duration", sc.duration);
  get_to(j, "gnss_rate", sc.gnss_rate);
  get_to(j, "seed", sc.seed);
  if (sc.duration <= 0 || sc.gnss_rate <= 0) {
    throw ConfigError("scenario: duration and gnss_rate must be positive");
  }
  return sc;
}

inline Scenario load_scenario(const std::string& path) {
  return scenario_from_json(load_json_file(path));
}

// Materialize filter and integrity settings from a run configuration.
inline FilterConfig to_filter_config(const RunConfig& c, const AntennaGeometry& geom,
                                     const ApertureThresholdTable* table) {
  const RunConfig::Grade g = c.grade();
  FilterConfig f;
  f.geometry = geom;
  f.noise.sigma_rho = c.sigma_rho;
  f.noise.sigma_phi = c.sigma_phi;
  f.imu.accel_noise_density = g.accel_nd;
  f.imu.sigma_ba = g.sigma_ba;
  f.imu.gyro_noise_density = g.gyro_nd;
  f.imu.sigma_bg = g.sigma_bg;
  f.imu.dt = 1.0 / g.rate_hz;
  f.imu.ou_exact = c.ou_exact;
  f.vdc.p0 = c.p0;
  f.vdc.p1 = c.p1;
  f.vdc.sigma_nhc_y = c.sigma_nhc_y;
  f.vdc.sigma_nhc_z = c.sigma_nhc_z;
  f.vdc.sigma_zx = c.sigma_zx;
  f.vdc.sigma_zy = c.sigma_zy;
  f.vdc.sigma_zz = c.sigma_zz;
  f.vdc.gamma_zupt_a = c.gamma_zupt_a;
  f.vdc.gamma_zupt_g = g.gamma_zupt_g;
  f.vdc.n_zupt = g.n_zupt;
  f.vdc.pf_zupt = g.pf_zupt;
  f.vdc.r_b_u = geom.r_b_u;
  f.aperture_pf = c.pf;
  f.aperture_table = table;
  f.outlier_gamma = c.outlier_gamma;
  f.use_ukf_linearization = c.use_ukf_linearization;
  f.enable_nhc = c.enable_nhc;
  f.enable_zupt = c.enable_zupt;
  f.enable_outlier_rejection = c.enable_outlier_rejection;
  return f;
}

inline IntegrityConfig to_integrity_config(const RunConfig& c) {
  IntegrityConfig ic;
  ic.window_length = c.window_length;
  ic.pf_psi = c.pf_psi;
  ic.reseed = c.reseed;
  ic.enable_false_fix_detection = c.enable_false_fix_detection;
  ic.enable_reseed = c.enable_reseed;
  return ic;
}

inline MonteCarloSpec to_monte_carlo_spec(const RunConfig& c) {
  MonteCarloSpec spec;
  spec.yaw_sigmas_deg = c.mc.yaw_sigmas_deg;
  spec.rp_sigma_deg = c.mc.rp_sigma_deg;
  spec.trials = c.mc.trials;
  spec.pf = c.mc.pf;
  spec.pos_sigma = c.mc.pos_sigma;
  spec.constellation.n_sats = c.mc.n_sats;
  spec.noise.sigma_rho = c.sigma_rho;
  spec.noise.sigma_phi = c.sigma_phi;
  spec.seed = c.seed;
  return spec;
}

}  // namespace tcnav
