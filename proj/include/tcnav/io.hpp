#pragma once

// CSV / JSON emission. Formatting is fixed (printf with explicit precision)
// so repeated runs at the same seed produce byte-identical files.

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "tcnav/runner.hpp"
#include "tcnav/sim.hpp"

namespace tcnav {

namespace detail {

class CsvFile {
 public:
  explicit CsvFile(const std::string& path) : f_(std::fopen(path.c_str(), "wb")) {
    if (!f_) throw IoError("cannot write " + path);
  }
  ~CsvFile() {
    if (f_) std::fclose(f_);
  }
  CsvFile(const CsvFile&) = delete;
  CsvFile& operator=(const CsvFile&) = delete;

  void line(const std::string& s) {
    std::fputs(s.c_str(), f_);
    std::fputc('\n', f_);
  }
  template <typename... Args>
  void row(const char* fmt, Args... args) {
    std::fprintf(f_, fmt, args...);
    std::fputc('\n', f_);
  }

 private:
  std::FILE* f_;
};

}  // namespace detail

inline void write_monte_carlo_csv(const std::vector<McRow>& rows,
                                  const std::string& path) {
  detail::CsvFile f(path);
  f.line("sigma_yaw_deg,method,p_success,p_fail,p_float,trials");
  for (const auto& r : rows) {
    f.row("%.6g,%s,%.10g,%.10g,%.10g,%ld", r.yaw_sigma_deg, to_string(r.method),
          r.p_success(), r.p_fail(), r.p_float(), r.trials);
  }
}

inline void write_epochs_csv(const std::vector<EpochReport>& epochs,
                             const std::string& path) {
  detail::CsvFile f(path);
  f.line(
      "t,fix_status,n_channels,n_excluded,pos_err_3d,pos_err_h,pos_err_v,"
      "att_err_x_deg,att_err_y_deg,att_err_z_deg,eps_phi,j3,psi,n_psi,"
      "reset,reseed,zupt");
  for (const auto& r : epochs) {
    const char* status = r.status == FixStatus::kFixed
                             ? "fixed"
                             : (r.status == FixStatus::kFloat ? "float" : "empty");
    f.row("%.3f,%s,%d,%d,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%d,%d,%d,%d",
          r.t, status, r.n_channels, r.n_excluded, r.pos_err_3d, r.pos_err_h,
          r.pos_err_v, r.att_err_deg(0), r.att_err_deg(1), r.att_err_deg(2),
          r.eps_phi, r.j3, r.psi, r.n_psi, static_cast<int>(r.reset),
          static_cast<int>(r.reseeded), static_cast<int>(r.zupt_applied));
  }
}

inline Json summary_to_json(const RunSummary& s) {
  Json j;
  j["epochs"] = s.epochs;
  j["fixed"] = s.fixed;
  j["float"] = s.floats;
  j["empty"] = s.empties;
  j["p_v"] = s.p_v;
  j["p_f"] = s.p_f;
  j["d95_3d_m"] = s.d95_3d;
  j["rmse_3d_m"] = s.rmse_3d;
  j["d95_h_m"] = s.d95_h;
  j["rmse_h_m"] = s.rmse_h;
  j["d95_v_m"] = s.d95_v;
  j["rmse_v_m"] = s.rmse_v;
  j["att_rms_deg"] = {s.att_rms_deg(0), s.att_rms_deg(1), s.att_rms_deg(2)};
  j["att_p95_deg"] = {s.att_p95_deg(0), s.att_p95_deg(1), s.att_p95_deg(2)};
  j["nis_rho_ratio"] = s.nis_rho_ratio;
  j["nis_phi_ratio"] = s.nis_phi_ratio;
  j["resets"] = s.resets;
  j["reseeds"] = s.reseeds;
  j["zupts"] = s.zupts;
  j["excluded_sats"] = s.excluded_sats;
  return j;
}

inline void write_json(const Json& j, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << j.dump(2) << "\n";
}

}  // namespace tcnav
