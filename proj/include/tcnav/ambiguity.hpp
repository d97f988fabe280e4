#pragma once

// Integer least squares over J2(n) = ||nu - R_nn n||^2 plus integer-aperture
// validation of the best candidate.
//
// The Z-transform is an LLL-style reduction built from integer Gauss
// transformations and adjacent column swaps (re-triangularized by Givens
// rotations), which is the standard decorrelation underlying LAMBDA-class
// solvers. The sphere search is depth-first Schnorr-Euchner enumeration with
// a shrinking radius, keeping the k best candidates.
//
// The aperture test is a difference test with empirically calibrated
// fixed-failure-rate thresholds, bucketed by (dof, model strength). The
// strength scalar is the bootstrapped ILS failure rate computed from the
// decorrelated conditional variances: unlike an ADOP-style determinant
// scalar (a geometric mean that hides weak directions), it transfers across
// problem ensembles with very different conditional-variance spectra.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "tcnav/aperture_table_data.hpp"
#include "tcnav/core.hpp"
#include "tcnav/rng.hpp"
#include "tcnav/stats.hpp"

namespace tcnav {

struct IlsProblem {
  MatX r_nn;  // upper triangular, nonsingular
  VecX nu;    // whitened residual

  int dim() const { return static_cast<int>(r_nn.rows()); }
};

struct IlsCandidate {
  VecXi n;
  double cost = 0.0;
};

struct IlsSolution {
  std::vector<IlsCandidate> candidates;  // sorted, best first
  double boot_failure = 1.0;  // bootstrapped ILS failure estimate, in (0, 1]

  const IlsCandidate& best() const { return candidates.at(0); }
  const IlsCandidate& second() const { return candidates.at(1); }
};

struct Decorrelation {
  MatX z;      // unimodular, n = z * m
  MatX z_inv;  // exact integer inverse
  MatX r_bar;  // upper triangular reduced factor
};

inline double ils_cost(const IlsProblem& p, const VecXi& n) {
  return (p.nu - p.r_nn * n.cast<double>()).squaredNorm();
}

// Bootstrapped (sequential rounding) failure-rate estimate from the
// conditional standard deviations 1/|r_ii| of a reduced triangular factor in
// whitened units: 1 - prod_i (2 Phi(|r_ii|/2) - 1).
inline double bootstrap_failure(const MatX& r_reduced) {
  double log_ps = 0.0;
  for (int i = 0; i < r_reduced.rows(); ++i) {
    const double p = 2.0 * normal_cdf(0.5 * std::abs(r_reduced(i, i))) - 1.0;
    if (p <= 0.0) return 1.0;
    log_ps += std::log(p);
  }
  return std::min(1.0, std::max(0.0, -std::expm1(log_ps)));
}

// LLL reduction (delta = 0.75) of the lattice basis formed by the columns of
// r_nn. Returns z with |det z| = 1 such that r_bar ~ r_nn * z up to an
// orthogonal left factor.
inline Decorrelation decorrelate(const MatX& r_nn) {
  const int n = static_cast<int>(r_nn.rows());
  if (r_nn.cols() != n) throw ConfigError("decorrelate: non-square factor");
  for (int i = 0; i < n; ++i) {
    if (std::abs(r_nn(i, i)) <= 1e-12) {
      throw NumericalError("decorrelate: singular triangular factor");
    }
  }
  Decorrelation d;
  d.z = MatX::Identity(n, n);
  d.z_inv = MatX::Identity(n, n);
  d.r_bar = r_nn;
  MatX& r = d.r_bar;

  auto size_reduce = [&](int k, int j) {
    const double mu = std::round(r(j, k) / r(j, j));
    if (mu != 0.0) {
      r.col(k).head(j + 1) -= mu * r.col(j).head(j + 1);
      d.z.col(k) -= mu * d.z.col(j);
      d.z_inv.row(j) += mu * d.z_inv.row(k);
    }
  };
  auto swap_cols = [&](int k) {
    r.col(k - 1).swap(r.col(k));
    d.z.col(k - 1).swap(d.z.col(k));
    d.z_inv.row(k - 1).swap(d.z_inv.row(k));
    // Givens on rows (k-1, k) restores the triangular form.
    const double a = r(k - 1, k - 1), b = r(k, k - 1);
    const double h = std::hypot(a, b);
    const double c = a / h, s = b / h;
    for (int col = k - 1; col < n; ++col) {
      const double x = r(k - 1, col), y = r(k, col);
      r(k - 1, col) = c * x + s * y;
      r(k, col) = -s * x + c * y;
    }
    r(k, k - 1) = 0.0;
  };

  const double delta = 0.99;
  int k = 1;
  int guard = 0;
  const int guard_max = 1000 * n * n + 1000;
  while (k < n) {
    if (++guard > guard_max) {
      throw NumericalError("decorrelate: reduction failed to terminate");
    }
    size_reduce(k, k - 1);
    if (delta * r(k - 1, k - 1) * r(k - 1, k - 1) >
        r(k, k) * r(k, k) + r(k - 1, k) * r(k - 1, k)) {
      swap_cols(k);
      k = std::max(1, k - 1);
    } else {
      for (int j = k - 2; j >= 0; --j) size_reduce(k, j);
      ++k;
    }
  }
  return d;
}

namespace detail {

inline bool lex_less(const VecXi& a, const VecXi& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

// Bounded best-k list ordered by (cost, lexicographic integer vector).
class BestK {
 public:
  explicit BestK(int k) : k_(k) {}
  double bound() const {
    return static_cast<int>(items_.size()) < k_
               ? std::numeric_limits<double>::infinity()
               : items_.back().cost;
  }
  void insert(VecXi n, double cost) {
    IlsCandidate c{std::move(n), cost};
    auto pos = std::upper_bound(items_.begin(), items_.end(), c,
                                [](const IlsCandidate& a, const IlsCandidate& b) {
                                  if (a.cost != b.cost) return a.cost < b.cost;
                                  return lex_less(a.n, b.n);
                                });
    items_.insert(pos, std::move(c));
    if (static_cast<int>(items_.size()) > k_) items_.pop_back();
  }
  std::vector<IlsCandidate> take() { return std::move(items_); }

 private:
  int k_;
  std::vector<IlsCandidate> items_;
};

}  // namespace detail

// k-best search with a precomputed reduction (hot path for calibration and
// repeated solves against one factor).
inline IlsSolution ils_search_reduced(const Decorrelation& dec, const IlsProblem& p,
                                      int k_best = 2) {
  if (k_best < 2) throw ConfigError("ils_search: k_best must be >= 2");
  const int n = p.dim();
  if (p.nu.size() != n) throw ConfigError("ils_search: dimension mismatch");

  IlsSolution sol;
  sol.boot_failure = bootstrap_failure(dec.r_bar);

  const MatX& r = dec.r_bar;
  // Float solution in reduced coordinates.
  const VecX n_float = p.r_nn.triangularView<Eigen::Upper>().solve(p.nu);
  const VecX m_float = dec.z_inv * n_float;

  detail::BestK best(k_best);
  // Depth-first enumeration, level n-1 (outermost) down to 0.
  VecX m = VecX::Zero(n);         // current integer assignment (as doubles)
  VecX center(n);                 // conditional center per level
  VecX step(n);                   // zig-zag step per level
  VecX partial(n + 1);            // partial cost; partial(n) = 0
  partial(n) = 0.0;

  auto center_at = [&](int i) {
    double acc = 0.0;
    for (int j = i + 1; j < n; ++j) acc += r(i, j) * (m(j) - m_float(j));
    return m_float(i) - acc / r(i, i);
  };
  auto level_cost = [&](int i) {
    const double d = r(i, i) * (m(i) - center_at(i));
    return d * d;
  };

  // Pruning bound is slightly inflated: leaf costs are re-evaluated in the
  // original coordinates, which can differ from the reduced-coordinate
  // partial sums by round-off.
  auto prune_bound = [&] { return best.bound() * (1.0 + 1e-9) + 1e-12; };

  int i = n - 1;
  center(i) = center_at(i);
  m(i) = std::round(center(i));
  step(i) = (center(i) >= m(i)) ? 1.0 : -1.0;
  while (true) {
    const double d = r(i, i) * (m(i) - center(i));
    const double cost_i = partial(i + 1) + d * d;
    if (cost_i < prune_bound()) {
      if (i == 0) {
        // Leaf: record candidate in original coordinates with exact cost.
        VecXi nz(n);
        const VecX n_orig = dec.z * m;
        for (int t = 0; t < n; ++t) nz(t) = static_cast<int>(std::llround(n_orig(t)));
        best.insert(nz, ils_cost(p, nz));
        // Advance zig-zag at this level.
        m(i) += step(i);
        step(i) = -step(i) - (step(i) > 0 ? 1.0 : -1.0);
      } else {
        partial(i) = cost_i;
        --i;
        center(i) = center_at(i);
        m(i) = std::round(center(i));
        step(i) = (center(i) >= m(i)) ? 1.0 : -1.0;
      }
    } else {
      // Exhausted this level (zig-zag costs grow monotonically): backtrack.
      if (i == n - 1) break;
      ++i;
      m(i) += step(i);
      step(i) = -step(i) - (step(i) > 0 ? 1.0 : -1.0);
    }
  }

  sol.candidates = best.take();
  if (static_cast<int>(sol.candidates.size()) < k_best) {
    throw NumericalError("ils_search: search produced fewer candidates than k_best");
  }
  return sol;
}

// Global k-best ILS via decorrelation + Schnorr-Euchner depth-first search.
inline IlsSolution ils_search(const IlsProblem& p, int k_best = 2) {
  return ils_search_reduced(decorrelate(p.r_nn), p, k_best);
}

// ---------------------------------------------------------------------------
// Fixed-failure-rate difference test
// ---------------------------------------------------------------------------

struct ApertureDecision {
  bool accepted = false;
  VecXi best;
  double statistic = 0.0;  // J2(second) - J2(best)
  double threshold = std::numeric_limits<double>::infinity();
  double pf = 0.0;
  int dof = 0;
  double boot_failure = 1.0;
  bool table_hit = false;  // false => conservative reject (missing entry)
};

class ApertureThresholdTable {
 public:
  // Buckets quantize log10 of the bootstrapped failure rate in half-decade
  // steps; rates below kFloor share the lowest bucket.
  static constexpr double kFailureFloor = 1e-7;
  static int bucket_of(double boot_failure) {
    const double f = std::min(1.0, std::max(kFailureFloor, boot_failure));
    return static_cast<int>(std::lround(2.0 * std::log10(f)));
  }

  void insert(int dof, int bucket, double pf, double threshold) {
    entries_[key(dof, bucket, pf)] = threshold;
  }

  std::optional<double> lookup(int dof, double boot_failure, double pf) const {
    const auto it = entries_.find(key(dof, bucket_of(boot_failure), pf));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  // CSV columns: dof, strength_bucket, p_f_target, threshold
  void save_csv(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw IoError("ApertureThresholdTable: cannot write " + path);
    f << "dof,strength_bucket,p_f_target,threshold\n";
    char buf[128];
    for (const auto& [k, v] : entries_) {
      const auto [dof, bucket, pfk] = k;
      std::snprintf(buf, sizeof(buf), "%d,%d,%.12g,%.12g\n", dof, bucket,
                    static_cast<double>(pfk) * 1e-12, v);
      f << buf;
    }
  }

  static ApertureThresholdTable load_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("ApertureThresholdTable: cannot read " + path);
    ApertureThresholdTable t;
    std::string line;
    std::getline(f, line);  // header
    while (std::getline(f, line)) {
      if (line.empty()) continue;
      std::istringstream ss(line);
      std::string tok;
      double vals[4];
      for (int i = 0; i < 4; ++i) {
        if (!std::getline(ss, tok, ',')) throw IoError("threshold table: bad row");
        vals[i] = std::stod(tok);
      }
      t.insert(static_cast<int>(vals[0]), static_cast<int>(vals[1]), vals[2], vals[3]);
    }
    return t;
  }

  // Default table shipped with the library; regenerate with the
  // `calibrate-aperture` CLI subcommand (data in aperture_table_data.hpp).
  static const ApertureThresholdTable& builtin() {
    static const ApertureThresholdTable t = [] {
      ApertureThresholdTable tab;
      for (const auto& r : detail::kDefaultApertureTable) {
        tab.insert(r.dof, r.bucket, r.pf, r.threshold);
      }
      return tab;
    }();
    return t;
  }

 private:
  static std::tuple<int, int, std::int64_t> key(int dof, int bucket, double pf) {
    return {dof, bucket, static_cast<std::int64_t>(std::llround(pf * 1e12))};
  }
  std::map<std::tuple<int, int, std::int64_t>, double> entries_;
};

// Difference test: accept the ILS best candidate iff
// J2(second) - J2(best) > mu(dof, strength, pf). A missing calibration entry
// rejects conservatively (decision carries table_hit = false as diagnostic).
inline ApertureDecision aperture_test(const IlsSolution& sol, int dof, double pf,
                                      const ApertureThresholdTable& table =
                                          ApertureThresholdTable::builtin()) {
  if (sol.candidates.size() < 2) throw ConfigError("aperture_test: need >= 2 candidates");
  ApertureDecision d;
  d.best = sol.best().n;
  d.statistic = sol.second().cost - sol.best().cost;
  d.pf = pf;
  d.dof = dof;
  d.boot_failure = sol.boot_failure;
  const auto thr = table.lookup(dof, sol.boot_failure, pf);
  if (thr.has_value()) {
    d.table_hit = true;
    d.threshold = *thr;
    d.accepted = d.statistic > d.threshold;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Offline threshold calibration
// ---------------------------------------------------------------------------

struct ApertureCalibrationSpec {
  int dof_min = 1;
  int dof_max = 32;
  int bucket_min = -14;  // bootstrapped failure 1e-7
  int bucket_max = 0;    // bootstrapped failure 1
  std::vector<double> pf_targets{0.01, 0.001};
  int samples = 100000;  // per (dof, bucket)
  int matrices = 20;     // problem matrices per (dof, bucket)
  std::uint64_t seed = 20220131ULL;
  int threads = 1;
};

namespace detail {

// Random nonsingular upper-triangular factor (R factor of a standard
// Gaussian matrix) scaled so its decorrelated bootstrapped failure rate hits
// the target. Scaling commutes with the reduction, so the factor is reduced
// once and the scale solved by bisection on the conditional variances.
inline MatX random_failure_factor(int dof, double target_failure, Rng& rng) {
  MatX a(dof, dof);
  for (int i = 0; i < dof; ++i)
    for (int j = 0; j < dof; ++j) a(i, j) = rng.normal();
  Eigen::HouseholderQR<MatX> qr(a);
  MatX r = qr.matrixQR().topRows(dof).triangularView<Eigen::Upper>();
  const Decorrelation dec = decorrelate(r);
  auto failure_at = [&](double c) {
    double log_ps = 0.0;
    for (int i = 0; i < dof; ++i) {
      const double p = 2.0 * normal_cdf(0.5 * c * std::abs(dec.r_bar(i, i))) - 1.0;
      if (p <= 0.0) return 1.0;
      log_ps += std::log(p);
    }
    return -std::expm1(log_ps);
  };
  double lo = 1e-8, hi = 1e8;
  for (int it = 0; it < 100; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (failure_at(mid) > target_failure) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi) * r;
}

}  // namespace detail

// Monte Carlo calibration: for each (dof, strength bucket), simulate whitened
// problems with known integers, record the difference statistic and
// correctness, and set the threshold to the smallest value that keeps the
// fraction of accepted-and-wrong trials at or below each target rate.
inline ApertureThresholdTable calibrate_aperture(const ApertureCalibrationSpec& spec) {
  ApertureThresholdTable table;
  struct Job {
    int dof, bucket;
  };
  std::vector<Job> jobs;
  for (int dof = spec.dof_min; dof <= spec.dof_max; ++dof)
    for (int b = spec.bucket_min; b <= spec.bucket_max; ++b) jobs.push_back({dof, b});

  std::vector<std::vector<std::pair<double, double>>> results(jobs.size());

  auto run_job = [&](size_t ji) {
    const auto [dof, bucket] = jobs[ji];
    const double target_failure = std::pow(10.0, 0.5 * bucket);
    Rng rng(spec.seed, 1000003ULL * dof + bucket + 7777);
    const int per_matrix = std::max(1, spec.samples / spec.matrices);
    std::vector<double> wrong_d;
    int total = 0;
    for (int mi = 0; mi < spec.matrices; ++mi) {
      const MatX r = detail::random_failure_factor(dof, target_failure, rng);
      const Decorrelation dec = decorrelate(r);
      for (int t = 0; t < per_matrix; ++t) {
        IlsProblem p;
        p.r_nn = r;
        p.nu = rng.normal_vec(dof);  // true integers = 0, whitened noise
        IlsSolution sol = ils_search_reduced(dec, p, 2);
        const bool wrong = (sol.best().n.array() != 0).any();
        if (wrong) wrong_d.push_back(sol.second().cost - sol.best().cost);
        ++total;
      }
    }
    std::sort(wrong_d.rbegin(), wrong_d.rend());
    std::vector<std::pair<double, double>> thr;
    for (double pf : spec.pf_targets) {
      const int allowed = static_cast<int>(pf * total);
      double mu = 0.0;
      if (static_cast<int>(wrong_d.size()) > allowed) mu = wrong_d[allowed];
      thr.emplace_back(pf, mu);
    }
    results[ji] = std::move(thr);
  };

  if (spec.threads <= 1) {
    for (size_t ji = 0; ji < jobs.size(); ++ji) run_job(ji);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < spec.threads; ++t) {
      pool.emplace_back([&] {
        for (size_t ji = next.fetch_add(1); ji < jobs.size(); ji = next.fetch_add(1)) {
          run_job(ji);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (size_t ji = 0; ji < jobs.size(); ++ji) {
    for (const auto& [pf, mu] : results[ji]) {
      table.insert(jobs[ji].dof, jobs[ji].bucket, pf, mu);
    }
  }
  return table;
}

}  // namespace tcnav
