#pragma once

// Robustness layer: pseudorange-innovations outlier exclusion, windowed
// carrier-phase NIS false-fix detection, and the dual-filter arrangement
// (primary fix-or-float filter plus a float-only companion) with soft reset
// and re-seed.

#include <deque>
#include <limits>
#include <vector>

#include "tcnav/filter.hpp"
#include "tcnav/stats.hpp"

namespace tcnav {

// ---------------------------------------------------------------------------
// Pseudorange outlier exclusion
// ---------------------------------------------------------------------------

struct OutlierResult {
  DdEpoch pruned;
  std::vector<int> excluded_sat_ids;
};

namespace detail {

// Satellite ids per DD channel, in the [baseline1; baseline2] channel order.
inline std::vector<int> channel_sat_ids(const SatelliteSet& sats) {
  std::vector<int> ids;
  for (const auto& band : sats.baseline1.bands)
    for (const auto& ch : band.sats) ids.push_back(ch.sat_id);
  for (const auto& band : sats.baseline2.bands)
    for (const auto& ch : band.sats) ids.push_back(ch.sat_id);
  return ids;
}

inline DdEpoch prune_satellites(const DdEpoch& epoch,
                                const std::vector<int>& excluded) {
  auto is_excluded = [&](int id) {
    return std::find(excluded.begin(), excluded.end(), id) != excluded.end();
  };
  DdEpoch out;
  out.t = epoch.t;
  const int n1 = epoch.sats.n1(), n2 = epoch.sats.n2();
  std::vector<int> keep_rows;  // into the old [rho1 phi1 rho2 phi2] layout
  std::vector<int> keep1, keep2;
  {
    int ch = 0;
    for (const auto& band : epoch.sats.baseline1.bands) {
      Band nb = band;
      nb.sats.clear();
      for (const auto& c : band.sats) {
        if (!is_excluded(c.sat_id)) {
          nb.sats.push_back(c);
          keep1.push_back(ch);
        }
        ++ch;
      }
      if (!nb.sats.empty()) out.sats.baseline1.bands.push_back(nb);
    }
    ch = 0;
    for (const auto& band : epoch.sats.baseline2.bands) {
      Band nb = band;
      nb.sats.clear();
      for (const auto& c : band.sats) {
        if (!is_excluded(c.sat_id)) {
          nb.sats.push_back(c);
          keep2.push_back(ch);
        }
        ++ch;
      }
      if (!nb.sats.empty()) out.sats.baseline2.bands.push_back(nb);
    }
  }
  for (int i : keep1) keep_rows.push_back(i);
  for (int i : keep1) keep_rows.push_back(n1 + i);
  for (int i : keep2) keep_rows.push_back(2 * n1 + i);
  for (int i : keep2) keep_rows.push_back(2 * n1 + n2 + i);
  const int m = static_cast<int>(keep_rows.size());
  out.z = VecX(m);
  out.sigma_g = MatX(m, m);
  for (int i = 0; i < m; ++i) {
    out.z(i) = epoch.z(keep_rows[i]);
    for (int j = 0; j < m; ++j)
      out.sigma_g(i, j) = epoch.sigma_g(keep_rows[i], keep_rows[j]);
  }
  return out;
}

}  // namespace detail

// Detection statistic q = nu^2 / (P_rho_rho)_nn per DD pseudorange channel;
// a channel over gamma^2 marks its non-pivot satellite corrupt, removing all
// of that satellite's pseudorange and phase channels on every baseline and
// frequency.
inline OutlierResult reject_pseudorange_outliers(const Belief& belief,
                                                 const DdEpoch& epoch,
                                                 const LinearizedBaselines& lin,
                                                 double gamma) {
  OutlierResult out;
  if (epoch.empty()) {
    out.pruned = epoch;
    return out;
  }
  const MeasurementGeometry mg = measurement_geometry(epoch.sats);
  const std::vector<int> rr = pseudorange_rows(epoch.sats);
  const MatX gs_r = detail::select_rows(mg.gs, rr);
  const MatX p_bb = lin.h_b * belief.cov * lin.h_b.transpose() + lin.sigma_b;
  const MatX p_rho = gs_r * p_bb * gs_r.transpose() +
                     detail::select_rows_cols(epoch.sigma_g, rr);
  const VecX nu = detail::select(epoch.z, rr) - gs_r * lin.b_bar;
  const std::vector<int> ids = detail::channel_sat_ids(epoch.sats);
  for (int i = 0; i < nu.size(); ++i) {
    const double q = nu(i) * nu(i) / p_rho(i, i);
    if (q > gamma * gamma) {
      if (std::find(out.excluded_sat_ids.begin(), out.excluded_sat_ids.end(),
                    ids[i]) == out.excluded_sat_ids.end()) {
        out.excluded_sat_ids.push_back(ids[i]);
      }
    }
  }
  out.pruned = out.excluded_sat_ids.empty()
                   ? epoch
                   : detail::prune_satellites(epoch, out.excluded_sat_ids);
  return out;
}

// ---------------------------------------------------------------------------
// Windowed carrier-phase NIS
// ---------------------------------------------------------------------------

class NisWindow {
 public:
  explicit NisWindow(int length = 10) : length_(length) {}

  void push(double eps_phi, int n_channels) {
    buf_.push_back({eps_phi, n_channels});
    while (static_cast<int>(buf_.size()) > length_) buf_.pop_front();
  }
  void clear() { buf_.clear(); }

  double psi() const {
    double s = 0.0;
    for (const auto& e : buf_) s += e.eps;
    return s;
  }
  int n_psi() const {
    int s = 0;
    for (const auto& e : buf_) s += e.n;
    return s;
  }
  int length() const { return length_; }

 private:
  struct Entry {
    double eps;
    int n;
  };
  int length_;
  std::deque<Entry> buf_;
};

// Push an epoch's fixed-solution phase NIS (eps_phi = 0, n = 0 on float
// epochs) and test Psi against the chi-square tail at the configured
// false-alarm rate.
inline bool nis_window_update(NisWindow& w, double eps_phi, int n_channels,
                              double pf_psi) {
  w.push(eps_phi, n_channels);
  const int dof = w.n_psi();
  if (dof <= 0) return false;
  return w.psi() > chi2_quantile_upper(dof, pf_psi);
}

// ---------------------------------------------------------------------------
// Dual-filter management
// ---------------------------------------------------------------------------

struct ReseedCriteria {
  double max_eps_per_n = 1.0;       // eps_phi / N at the last fix
  double max_psi_ratio = 0.5;       // Psi / N_Psi over the window
  int min_channels = 10;            // N at the last fix
  double min_time_since_reset = 2.0;  // seconds
};

struct IntegrityConfig {
  int window_length = 10;
  double pf_psi = 1e-15;
  ReseedCriteria reseed;
  bool enable_false_fix_detection = true;
  bool enable_reseed = true;
};

struct EpochReportData {
  double t = 0.0;
  FixStatus status = FixStatus::kEmpty;
  int n_channels = 0;
  int n_excluded = 0;
  double eps_phi = 0.0;
  double j3 = 0.0;
  double psi = 0.0;
  int n_psi = 0;
  bool alarm = false;
  bool reset = false;
  bool reseeded = false;
  bool zupt_applied = false;
  bool nhc_applied = false;
  bool rank_deficient = false;
  ApertureDecision aperture;
  Belief primary;
  Belief float_only;
};

struct DualFilterCounters {
  long fixes = 0;
  long floats = 0;
  long empties = 0;
  long resets = 0;
  long reseeds = 0;
  long zupts = 0;
  long excluded_sats = 0;
};

class DualFilter {
 public:
  DualFilter(const FilterConfig& primary_cfg, IntegrityConfig integrity,
             const Belief& init)
      : primary_(primary_cfg, init),
        float_only_(make_float_cfg(primary_cfg), init),
        integrity_(integrity),
        window_(integrity.window_length) {}

  NavFilter& primary() { return primary_; }
  NavFilter& float_only() { return float_only_; }
  const DualFilterCounters& counters() const { return counters_; }
  const NisWindow& window() const { return window_; }
  double t_since_reset(double t) const {
    return t - (have_reset_ ? t_last_reset_ : -std::numeric_limits<double>::infinity());
  }

  void propagate(const ImuSample& u) {
    primary_.propagate(u);
    float_only_.propagate(u);
  }

  // One GNSS epoch: float-only filter consumes pseudoranges only; the
  // primary runs outlier rejection, the fix-or-float update, the windowed
  // NIS test, soft reset and re-seed, in that order.
  EpochReportData step_epoch(const DdEpoch& epoch) {
    EpochReportData rep;
    rep.t = epoch.t;

    {
      const LinearizedBaselines lin = float_only_.linearize();
      DdEpoch pruned = epoch;
      if (float_only_.config().enable_outlier_rejection) {
        pruned = reject_pseudorange_outliers(float_only_.belief(), epoch, lin,
                                             float_only_.config().outlier_gamma)
                     .pruned;
      }
      float_only_.process_epoch(pruned, lin);
    }

    {
      const LinearizedBaselines lin = primary_.linearize();
      DdEpoch pruned = epoch;
      if (primary_.config().enable_outlier_rejection) {
        OutlierResult r = reject_pseudorange_outliers(
            primary_.belief(), epoch, lin, primary_.config().outlier_gamma);
        pruned = r.pruned;
        rep.n_excluded = static_cast<int>(r.excluded_sat_ids.size());
        counters_.excluded_sats += rep.n_excluded;
      }
      const EpochSummary sum = primary_.process_epoch(pruned, lin);
      rep.status = sum.update.outcome.status;
      rep.n_channels = sum.update.outcome.n_channels;
      rep.eps_phi = sum.update.outcome.eps_phi;
      rep.j3 = sum.update.outcome.j3;
      rep.aperture = sum.update.outcome.aperture;
      rep.rank_deficient = sum.update.outcome.rank_deficient;
      rep.zupt_applied = sum.zupt_applied;
      rep.nhc_applied = sum.nhc_applied;
      if (sum.zupt_applied) ++counters_.zupts;

      switch (rep.status) {
        case FixStatus::kFixed:
          ++counters_.fixes;
          break;
        case FixStatus::kFloat:
          ++counters_.floats;
          break;
        case FixStatus::kEmpty:
          ++counters_.empties;
          break;
      }

      // The window always accumulates (re-seed and reporting read it); the
      // alarm only fires when detection is enabled.
      const bool fixed = rep.status == FixStatus::kFixed;
      const bool exceeded =
          nis_window_update(window_, fixed ? rep.eps_phi : 0.0,
                            fixed ? rep.n_channels : 0, integrity_.pf_psi);
      rep.psi = window_.psi();
      rep.n_psi = window_.n_psi();
      rep.alarm = exceeded && integrity_.enable_false_fix_detection;
      if (rep.alarm) {
        soft_reset(epoch.t);
        rep.reset = true;
      } else if (fixed && integrity_.enable_reseed) {
        rep.reseeded = maybe_reseed(epoch.t, rep.eps_phi, rep.n_channels);
      }
    }

    rep.primary = primary_.belief();
    rep.float_only = float_only_.belief();
    return rep;
  }

  // Discard the primary belief in favor of the uncontaminated float-only
  // belief; the NIS window restarts (stale post-false-fix residuals would
  // immediately re-alarm).
  void soft_reset(double t) {
    primary_.belief() = float_only_.belief();
    window_.clear();
    t_last_reset_ = t;
    have_reset_ = true;
    ++counters_.resets;
  }

  bool maybe_reseed(double t, double eps_phi, int n_channels) {
    const ReseedCriteria& c = integrity_.reseed;
    if (n_channels <= 0) return false;
    if (eps_phi / n_channels > c.max_eps_per_n) return false;
    const int npsi = window_.n_psi();
    if (npsi <= 0 || window_.psi() / npsi > c.max_psi_ratio) return false;
    if (n_channels < c.min_channels) return false;
    if (t_since_reset(t) < c.min_time_since_reset) return false;
    float_only_.belief() = primary_.belief();
    ++counters_.reseeds;
    return true;
  }

 private:
  static FilterConfig make_float_cfg(FilterConfig cfg) {
    cfg.pseudorange_only = true;
    return cfg;
  }

  NavFilter primary_;
  NavFilter float_only_;
  IntegrityConfig integrity_;
  NisWindow window_;
  DualFilterCounters counters_;
  double t_last_reset_ = 0.0;
  bool have_reset_ = false;
};

}  // namespace tcnav
