// tcnav command-line front end.
//
// Subcommands:
//   montecarlo         linearization Monte Carlo sweep -> CSV
//   run                end-to-end filter run over a scenario -> CSV + JSON
//   ablate             run a scenario under alternate configurations
//   calibrate-aperture rebuild the integer-aperture threshold table
//
// Exit codes: 0 ok, 2 configuration error, 3 I/O error, 4 numerical failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tcnav/config.hpp"
#include "tcnav/io.hpp"
#include "tcnav/runner.hpp"

namespace {

using namespace tcnav;

RunConfig load_config_or_default(const std::string& path) {
  if (path.empty()) return RunConfig{};
  return load_run_config(path);
}

const ApertureThresholdTable* resolve_table(const RunConfig& cfg,
                                            ApertureThresholdTable& storage) {
  if (cfg.aperture_table_path.empty()) return &ApertureThresholdTable::builtin();
  storage = ApertureThresholdTable::load_csv(cfg.aperture_table_path);
  return &storage;
}

int cmd_montecarlo(const std::string& config_path, const std::string& out_path,
                   std::uint64_t seed_override, bool have_seed, int threads) {
  RunConfig cfg = load_config_or_default(config_path);
  if (have_seed) cfg.seed = seed_override;
  ApertureThresholdTable storage;
  const ApertureThresholdTable* table = resolve_table(cfg, storage);
  MonteCarloSpec spec = to_monte_carlo_spec(cfg);
  spec.threads = threads;
  const std::vector<McRow> rows = run_monte_carlo(spec, *table);
  write_monte_carlo_csv(rows, out_path);
  std::printf("wrote %zu rows to %s\n", rows.size(), out_path.c_str());
  return 0;
}

int cmd_run(const std::string& scenario_path, const std::string& config_path,
            const std::string& out_path, const std::string& summary_path,
            std::uint64_t seed_override, bool have_seed) {
  Scenario sc = load_scenario(scenario_path);
  RunConfig cfg = load_config_or_default(config_path);
  if (have_seed) sc.seed = seed_override;
  ApertureThresholdTable storage;
  const ApertureThresholdTable* table = resolve_table(cfg, storage);
  const RunOutput out = run_scenario(sc, cfg, table);
  if (!out_path.empty()) write_epochs_csv(out.epochs, out_path);
  const Json j = summary_to_json(out.summary);
  if (!summary_path.empty()) {
    write_json(j, summary_path);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct AblateFlag {
  const char* name;
  void (*apply)(RunConfig&);
};

const AblateFlag kAblateFlags[] = {
    {"baseline", [](RunConfig&) {}},
    {"single-antenna", [](RunConfig& c) { c.multi_antenna = false; }},
    {"no-nhc", [](RunConfig& c) { c.enable_nhc = false; }},
    {"no-zupt", [](RunConfig& c) { c.enable_zupt = false; }},
    {"no-outlier-rejection", [](RunConfig& c) { c.enable_outlier_rejection = false; }},
    {"no-reseed", [](RunConfig& c) { c.enable_reseed = false; }},
    {"no-false-fix-detection",
     [](RunConfig& c) {
       c.enable_false_fix_detection = false;
       c.enable_reseed = false;
     }},
    {"l1-only", [](RunConfig& c) { c.use_l2 = false; }},
    {"ekf-linearization", [](RunConfig& c) { c.use_ukf_linearization = false; }},
};

int cmd_ablate(const std::string& scenario_path, const std::string& config_path,
               const std::vector<std::string>& flags, const std::string& out_path,
               std::uint64_t seed_override, bool have_seed) {
  Scenario sc = load_scenario(scenario_path);
  if (have_seed) sc.seed = seed_override;
  const RunConfig base = load_config_or_default(config_path);
  ApertureThresholdTable storage;
  const ApertureThresholdTable* table = resolve_table(base, storage);

  std::vector<std::string> selected = flags;
  if (selected.empty() ||
      (selected.size() == 1 && selected[0] == "all")) {
    selected.clear();
    for (const auto& f : kAblateFlags) selected.push_back(f.name);
  } else {
    selected.insert(selected.begin(), "baseline");
  }

  detail::CsvFile f(out_path);
  f.line(
      "configuration,p_v,p_f,d95_3d_m,rmse_3d_m,d95_h_m,rmse_h_m,resets,reseeds,"
      "zupts,excluded_sats");
  for (const std::string& name : selected) {
    const AblateFlag* flag = nullptr;
    for (const auto& g : kAblateFlags) {
      if (name == g.name) flag = &g;
    }
    if (!flag) throw ConfigError("unknown ablation flag: " + name);
    RunConfig cfg = base;
    flag->apply(cfg);
    const RunOutput out = run_scenario(sc, cfg, table);
    const RunSummary& s = out.summary;
    f.row("%s,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%ld,%ld,%ld,%ld", name.c_str(),
          s.p_v, s.p_f, s.d95_3d, s.rmse_3d, s.d95_h, s.rmse_h, s.resets, s.reseeds,
          s.zupts, s.excluded_sats);
    std::printf("%-24s P_V=%.4f P_f=%.4f d95=%.3f m\n", name.c_str(), s.p_v, s.p_f,
                s.d95_3d);
  }
  return 0;
}

int cmd_calibrate(const std::string& out_path, int dof_min, int dof_max,
                  int bucket_min, int bucket_max, int samples, int matrices,
                  std::uint64_t seed, int threads, std::vector<double> pfs) {
  ApertureCalibrationSpec spec;
  spec.dof_min = dof_min;
  spec.dof_max = dof_max;
  spec.bucket_min = bucket_min;
  spec.bucket_max = bucket_max;
  spec.samples = samples;
  spec.matrices = matrices;
  spec.seed = seed;
  spec.threads = threads;
  if (!pfs.empty()) spec.pf_targets = pfs;
  const ApertureThresholdTable table = calibrate_aperture(spec);
  table.save_csv(out_path);
  std::printf("wrote %zu thresholds to %s\n", table.size(), out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tightly-coupled multi-antenna CDGNSS/INS estimation toolkit"};
  app.require_subcommand(1);

  std::string config_path, scenario_path, out_path, summary_path;
  std::uint64_t seed = 0;
  int threads = 1;
  std::vector<std::string> flags;

  auto* mc = app.add_subcommand("montecarlo", "linearization Monte Carlo sweep");
  mc->add_option("--config", config_path, "run configuration JSON");
  mc->add_option("--out", out_path, "output CSV path")->required();
  auto* mc_seed = mc->add_option("--seed", seed, "RNG seed override");
  mc->add_option("--threads", threads, "worker threads");

  auto* run = app.add_subcommand("run", "end-to-end filter run over a scenario");
  run->add_option("--scenario", scenario_path, "scenario JSON")->required();
  run->add_option("--config", config_path, "run configuration JSON");
  run->add_option("--out", out_path, "per-epoch CSV path");
  run->add_option("--summary", summary_path, "summary JSON path");
  auto* run_seed = run->add_option("--seed", seed, "scenario seed override");

  auto* ab = app.add_subcommand("ablate", "compare alternate configurations");
  ab->add_option("--scenario", scenario_path, "scenario JSON")->required();
  ab->add_option("--config", config_path, "base configuration JSON");
  ab->add_option("--flags", flags, "ablation flags (default: all)")->delimiter(',');
  ab->add_option("--out", out_path, "output CSV path")->required();
  auto* ab_seed = ab->add_option("--seed", seed, "scenario seed override");

  int dof_min = 1, dof_max = 24, bucket_min = -14, bucket_max = 0;
  int samples = 100000, matrices = 20;
  std::uint64_t cal_seed = 20220131ULL;
  std::vector<double> pfs;
  auto* cal = app.add_subcommand("calibrate-aperture",
                                 "rebuild the integer-aperture threshold table");
  cal->add_option("--out", out_path, "output CSV path")->required();
  cal->add_option("--dof-min", dof_min, "smallest ambiguity count");
  cal->add_option("--dof-max", dof_max, "largest ambiguity count");
  cal->add_option("--bucket-min", bucket_min, "lowest failure bucket (2 log10 f)");
  cal->add_option("--bucket-max", bucket_max, "highest failure bucket");
  cal->add_option("--samples", samples, "Monte Carlo samples per bucket");
  cal->add_option("--matrices", matrices, "problem matrices per bucket");
  cal->add_option("--seed", cal_seed, "calibration seed");
  cal->add_option("--threads", threads, "worker threads");
  cal->add_option("--pf", pfs, "target failure rates")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (mc->parsed()) {
      return cmd_montecarlo(config_path, out_path, seed, mc_seed->count() > 0,
                            threads);
    }
    if (run->parsed()) {
      return cmd_run(scenario_path, config_path, out_path, summary_path, seed,
                     run_seed->count() > 0);
    }
    if (ab->parsed()) {
      return cmd_ablate(scenario_path, config_path, flags, out_path, seed,
                        ab_seed->count() > 0);
    }
    if (cal->parsed()) {
      return cmd_calibrate(out_path, dof_min, dof_max, bucket_min, bucket_max,
                           samples, matrices, cal_seed, threads, pfs);
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 0;
}
