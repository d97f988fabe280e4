#pragma once

// Square-root CDGNSS measurement update.
//
// The update minimizes
//   J(dx, n) = ||nu_g - H_r dx - H_n n||^2_{Sigma_k^-1} + ||dx||^2_{P^-1}
// with Sigma_k = Sigma_g + Gs Sigma_b Gs^T. Whitening both terms and QR
// factoring the stacked system splits J into J1(dx, n) + J2(n) + J3; the
// float solution zeroes J1 and J2 by backsubstitution, the fixed solution
// conditions on an ILS-validated integer vector, and J3 is the irreducible
// cost (equal to the pseudorange NIS under single-epoch ambiguity
// resolution).
//
// The core is dimension-agnostic (nx inferred from inputs); the NavState
// wrapper at the bottom fixes nx = 15 and applies oplus.

#include <limits>
#include <utility>

#include "tcnav/ambiguity.hpp"
#include "tcnav/cdgnss.hpp"
#include "tcnav/core.hpp"
#include "tcnav/manifold.hpp"
#include "tcnav/ut.hpp"

namespace tcnav {

struct StackedSystem {
  VecX nu;  // (nx + m) whitened residual stack, prior rows first (= 0)
  MatX hx;  // (nx + m) x nx
  MatX hn;  // (nx + m) x nn
  int nx = 0;
  int nn = 0;
};

struct DecomposedCost {
  MatX r_xx;  // nx x nx upper triangular
  MatX r_xn;  // nx x nn
  MatX r_nn;  // nn x nn upper triangular
  VecX nu1;   // nx
  VecX nu2;   // nn
  double j3 = 0.0;
  int nx = 0;
  int nn = 0;
  bool rank_ok = true;  // r_nn (and r_xx) nonsingular

  double j1(const VecX& dx, const VecX& n) const {
    return (nu1 - r_xx * dx - r_xn * n).squaredNorm();
  }
  double j2(const VecX& n) const { return (nu2 - r_nn * n).squaredNorm(); }
  double j2_int(const VecXi& n) const { return j2(n.cast<double>()); }
};

// Measurement geometry shared by the update and the outlier test:
// Gs is the 2N x 6 stack [G1 0; G1 0; 0 G2; 0 G2], h_n the wavelength block.
struct MeasurementGeometry {
  MatX gs;
  MatX h_n;
  int n1 = 0, n2 = 0;
};

inline MeasurementGeometry measurement_geometry(const SatelliteSet& sats) {
  MeasurementGeometry mg;
  mg.n1 = sats.n1();
  mg.n2 = sats.n2();
  const int n = mg.n1 + mg.n2;
  mg.gs = MatX::Zero(2 * n, 6);
  mg.h_n = MatX::Zero(2 * n, n);
  if (mg.n1 > 0) {
    const MatX g1 = geometry_matrix(sats.baseline1);
    const VecX lam1 = wavelength_diag(sats.baseline1);
    mg.gs.block(0, 0, mg.n1, 3) = g1;
    mg.gs.block(mg.n1, 0, mg.n1, 3) = g1;
    mg.h_n.block(mg.n1, 0, mg.n1, mg.n1) = MatX(lam1.asDiagonal());
  }
  if (mg.n2 > 0) {
    const MatX g2 = geometry_matrix(sats.baseline2);
    const VecX lam2 = wavelength_diag(sats.baseline2);
    mg.gs.block(2 * mg.n1, 3, mg.n2, 3) = g2;
    mg.gs.block(2 * mg.n1 + mg.n2, 3, mg.n2, 3) = g2;
    mg.h_n.block(2 * mg.n1 + mg.n2, mg.n1, mg.n2, mg.n2) = MatX(lam2.asDiagonal());
  }
  return mg;
}

// Row indices of pseudorange / phase entries in the [rho1; phi1; rho2; phi2]
// stack.
inline std::vector<int> pseudorange_rows(const SatelliteSet& sats) {
  std::vector<int> rows;
  for (int i = 0; i < sats.n1(); ++i) rows.push_back(i);
  for (int i = 0; i < sats.n2(); ++i) rows.push_back(2 * sats.n1() + i);
  return rows;
}
inline std::vector<int> phase_rows(const SatelliteSet& sats) {
  std::vector<int> rows;
  for (int i = 0; i < sats.n1(); ++i) rows.push_back(sats.n1() + i);
  for (int i = 0; i < sats.n2(); ++i) rows.push_back(2 * sats.n1() + sats.n2() + i);
  return rows;
}

// Whitened, stacked least-squares system from explicit blocks: prior sqrt
// information rows on top, whitened measurement rows below.
inline StackedSystem stack_whitened(const MatX& prior_cov, const VecX& nu_g,
                                    const MatX& h_r, const MatX& h_n,
                                    const MatX& sigma_k) {
  const int nx = static_cast<int>(prior_cov.rows());
  const int m = static_cast<int>(nu_g.size());
  const int nn = static_cast<int>(h_n.cols());

  const MatX lp = chol_with_jitter(prior_cov);
  // R_xx_prior = Lp^-1 (any square root of P^-1 serves the cost form).
  const MatX r_prior =
      lp.triangularView<Eigen::Lower>().solve(MatX::Identity(nx, nx));

  Eigen::LLT<MatX> llt(sigma_k);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("stack_whitened: measurement covariance not PD");
  }
  const MatX lg = llt.matrixL();
  auto whiten = [&](const MatX& a) -> MatX {
    return lg.triangularView<Eigen::Lower>().solve(a);
  };

  StackedSystem s;
  s.nx = nx;
  s.nn = nn;
  s.nu = VecX::Zero(nx + m);
  s.nu.tail(m) = whiten(nu_g);
  s.hx = MatX::Zero(nx + m, nx);
  s.hx.topRows(nx) = r_prior;
  s.hx.bottomRows(m) = whiten(h_r);
  s.hn = MatX::Zero(nx + m, nn);
  if (nn > 0) s.hn.bottomRows(m) = whiten(h_n);
  return s;
}

// Innovations, whitening and stacking for a full DD epoch.
inline StackedSystem build_normalized_system(const Belief& belief,
                                             const LinearizedBaselines& lin,
                                             const DdEpoch& epoch) {
  const MeasurementGeometry mg = measurement_geometry(epoch.sats);
  const VecX h0 = mg.gs * lin.b_bar;
  const VecX nu_g = epoch.z - h0;
  const MatX h_r = mg.gs * lin.h_b;
  const MatX sigma_k =
      epoch.sigma_g + mg.gs * lin.sigma_b * mg.gs.transpose();
  return stack_whitened(belief.cov, nu_g, h_r, mg.h_n, sigma_k);
}

// QR decomposition of the stacked system into the three cost terms.
inline DecomposedCost qr_decompose(const StackedSystem& s) {
  const int rows = static_cast<int>(s.nu.size());
  const int nx = s.nx, nn = s.nn;
  MatX a(rows, nx + nn);
  a.leftCols(nx) = s.hx;
  if (nn > 0) a.rightCols(nn) = s.hn;

  Eigen::HouseholderQR<MatX> qr(a);
  const MatX r = qr.matrixQR().topRows(std::min(rows, nx + nn))
                     .triangularView<Eigen::Upper>();
  const VecX qtnu = qr.householderQ().adjoint() * s.nu;

  DecomposedCost d;
  d.nx = nx;
  d.nn = nn;
  d.r_xx = r.topLeftCorner(nx, nx);
  d.r_xn = nn > 0 ? MatX(r.topRightCorner(nx, nn)) : MatX(nx, 0);
  d.r_nn = nn > 0 ? MatX(r.block(nx, nx, nn, nn)) : MatX(0, 0);
  d.nu1 = qtnu.head(nx);
  d.nu2 = nn > 0 ? VecX(qtnu.segment(nx, nn)) : VecX(0);
  d.j3 = qtnu.tail(rows - nx - nn).squaredNorm();

  const double scale_x = d.r_xx.diagonal().cwiseAbs().maxCoeff();
  for (int i = 0; i < nx; ++i) {
    if (std::abs(d.r_xx(i, i)) < 1e-12 * scale_x) d.rank_ok = false;
  }
  if (nn > 0) {
    const double scale_n = d.r_nn.diagonal().cwiseAbs().maxCoeff();
    if (scale_n <= 0.0) {
      d.rank_ok = false;
    } else {
      for (int i = 0; i < nn; ++i) {
        if (std::abs(d.r_nn(i, i)) < 1e-10 * scale_n) d.rank_ok = false;
      }
    }
  }
  return d;
}

// Float solution: backsubstitution zeroes J1 and J2.
inline std::pair<VecX, VecX> float_solution(const DecomposedCost& d) {
  if (!d.rank_ok) throw NumericalError("float_solution: singular blocks");
  VecX n_float(d.nn);
  if (d.nn > 0) {
    n_float = d.r_nn.triangularView<Eigen::Upper>().solve(d.nu2);
  }
  const VecX dx = d.r_xx.triangularView<Eigen::Upper>().solve(
      d.nn > 0 ? VecX(d.nu1 - d.r_xn * n_float) : d.nu1);
  return {dx, n_float};
}

// State increment and covariance conditioned on integers n.
// (The displayed fixed-solution formula omits the R_xn n term; it is required
// dimensionally and restored here.)
inline std::pair<VecX, MatX> fixed_solution(const DecomposedCost& d, const VecXi& n) {
  if (!d.rank_ok) throw NumericalError("fixed_solution: singular blocks");
  const VecX rhs = d.nu1 - d.r_xn * n.cast<double>();
  const VecX dx = d.r_xx.triangularView<Eigen::Upper>().solve(rhs);
  const MatX tinv = d.r_xx.triangularView<Eigen::Upper>().solve(
      MatX::Identity(d.nx, d.nx));
  MatX cov = tinv * tinv.transpose();
  symmetrize(cov);
  return {dx, cov};
}

// Marginal covariance of the float solution: first nx rows/cols of
// (R^T R)^-1 for the full triangular factor R = [r_xx r_xn; 0 r_nn].
inline MatX float_posterior_cov(const DecomposedCost& d) {
  if (!d.rank_ok) throw NumericalError("float_posterior_cov: singular blocks");
  const int nt = d.nx + d.nn;
  MatX r = MatX::Zero(nt, nt);
  r.topLeftCorner(d.nx, d.nx) = d.r_xx;
  if (d.nn > 0) {
    r.topRightCorner(d.nx, d.nn) = d.r_xn;
    r.bottomRightCorner(d.nn, d.nn) = d.r_nn;
  }
  const MatX tinv = r.triangularView<Eigen::Upper>().solve(MatX::Identity(nt, nt));
  MatX cov_full = tinv * tinv.transpose();
  MatX cov = cov_full.topLeftCorner(d.nx, d.nx);
  symmetrize(cov);
  return cov;
}

enum class FixStatus { kFixed, kFloat, kEmpty };

struct AmbiguityOutcome {
  FixStatus status = FixStatus::kEmpty;
  VecXi n_fixed;
  VecX n_float;
  double j1 = 0.0;
  double j2 = 0.0;  // J2 at the chosen integer vector (0 for float epochs)
  double j3 = 0.0;
  double eps_phi = 0.0;  // carrier phase NIS = J2(n_check) on fixed epochs
  int n_channels = 0;    // DD channel pairs used
  ApertureDecision aperture;
  bool rank_deficient = false;
  bool pseudorange_only = false;
};

struct UpdateResult {
  Belief posterior;
  AmbiguityOutcome outcome;
};

struct UpdateParams {
  double pf = 0.001;  // integer-aperture fixed failure rate
  const ApertureThresholdTable* table = &ApertureThresholdTable::builtin();
  bool pseudorange_only = false;  // float-only filter: drop phase rows
};

namespace detail {

inline MatX select_rows(const MatX& m, const std::vector<int>& rows) {
  MatX out(rows.size(), m.cols());
  for (size_t i = 0; i < rows.size(); ++i) out.row(i) = m.row(rows[i]);
  return out;
}
inline VecX select(const VecX& v, const std::vector<int>& rows) {
  VecX out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) out(i) = v(rows[i]);
  return out;
}
inline MatX select_rows_cols(const MatX& m, const std::vector<int>& idx) {
  MatX out(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

// Pseudorange-only least-squares update (also the rank-deficiency fallback).
inline UpdateResult pseudorange_only_update(const Belief& belief,
                                            const LinearizedBaselines& lin,
                                            const DdEpoch& epoch) {
  const MeasurementGeometry mg = measurement_geometry(epoch.sats);
  const std::vector<int> rr = pseudorange_rows(epoch.sats);
  const MatX gs_r = select_rows(mg.gs, rr);
  const VecX nu_g = select(epoch.z, rr) - gs_r * lin.b_bar;
  const MatX h_r = gs_r * lin.h_b;
  const MatX sigma_full =
      epoch.sigma_g + mg.gs * lin.sigma_b * mg.gs.transpose();
  const MatX sigma_rho = select_rows_cols(sigma_full, rr);

  const StackedSystem s =
      stack_whitened(belief.cov, nu_g, h_r, MatX(nu_g.size(), 0), sigma_rho);
  const DecomposedCost d = qr_decompose(s);
  const auto [dx, n_float] = float_solution(d);

  UpdateResult out;
  out.posterior.mean = oplus(belief.mean, Vec15(dx));
  out.posterior.cov = float_posterior_cov(d);
  out.posterior.symmetrize_cov();
  out.outcome.status = FixStatus::kFloat;
  out.outcome.j3 = d.j3;
  out.outcome.n_channels = epoch.sats.n_total();
  out.outcome.pseudorange_only = true;
  return out;
}

}  // namespace detail

// Full fix-or-float epoch update.
inline UpdateResult measurement_update(const Belief& belief, const DdEpoch& epoch,
                                       const LinearizedBaselines& lin,
                                       const UpdateParams& params) {
  UpdateResult out;
  if (epoch.empty()) {
    out.posterior = belief;
    out.outcome.status = FixStatus::kEmpty;
    return out;
  }
  if (params.pseudorange_only) {
    return detail::pseudorange_only_update(belief, lin, epoch);
  }

  const StackedSystem s = build_normalized_system(belief, lin, epoch);
  const DecomposedCost d = qr_decompose(s);
  if (!d.rank_ok) {
    out = detail::pseudorange_only_update(belief, lin, epoch);
    out.outcome.rank_deficient = true;
    return out;
  }

  IlsProblem prob{d.r_nn, d.nu2};
  const IlsSolution sol = ils_search(prob, 2);
  const ApertureDecision ap = aperture_test(sol, d.nn, params.pf, *params.table);

  out.outcome.j3 = d.j3;
  out.outcome.n_channels = epoch.sats.n_total();
  out.outcome.aperture = ap;

  if (ap.accepted) {
    const auto [dx, cov] = fixed_solution(d, ap.best);
    out.posterior.mean = oplus(belief.mean, Vec15(dx));
    out.posterior.cov = cov;
    out.outcome.status = FixStatus::kFixed;
    out.outcome.n_fixed = ap.best;
    out.outcome.j2 = sol.best().cost;
    out.outcome.eps_phi = sol.best().cost;
    out.outcome.j1 = d.j1(dx, ap.best.cast<double>());
  } else {
    const auto [dx, n_float] = float_solution(d);
    out.posterior.mean = oplus(belief.mean, Vec15(dx));
    out.posterior.cov = float_posterior_cov(d);
    out.outcome.status = FixStatus::kFloat;
    out.outcome.n_float = n_float;
    out.outcome.j1 = d.j1(dx, n_float);
  }
  out.posterior.symmetrize_cov();
  return out;
}

}  // namespace tcnav
