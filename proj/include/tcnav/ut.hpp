#pragma once

// Scaled unscented transform over the NavState manifold: sigma points are
// spread with oplus, deviations recovered with ominus. Shared by the CDGNSS
// linearization, the propagation step, and the vehicle-dynamics
// pseudo-measurement updates.

#include <functional>
#include <vector>

#include "tcnav/core.hpp"
#include "tcnav/manifold.hpp"

namespace tcnav {

struct UtWeights {
  double lambda = 0.0;
  double wm0 = 0.0, wc0 = 0.0, wi = 0.0;
  int n = 0;

  static UtWeights make(int n, double alpha = 1e-3, double kappa = 0.0,
                        double beta = 2.0) {
    UtWeights w;
    w.n = n;
    w.lambda = alpha * alpha * (n + kappa) - n;
    w.wm0 = w.lambda / (n + w.lambda);
    w.wc0 = w.wm0 + 1.0 - alpha * alpha + beta;
    w.wi = 1.0 / (2.0 * (n + w.lambda));
    return w;
  }
};

// Lower Cholesky factor with a single jitter retry
// (adds 1e-12 * trace/dim on the diagonal), then errors.
inline MatX chol_with_jitter(MatX p) {
  Eigen::LLT<MatX> llt(p);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  const double jitter = 1e-12 * p.trace() / static_cast<double>(p.rows());
  p.diagonal().array() += (jitter > 0.0 ? jitter : 1e-15);
  Eigen::LLT<MatX> llt2(p);
  if (llt2.info() != Eigen::Success) {
    throw NumericalError("chol_with_jitter: covariance not PD after jitter");
  }
  return llt2.matrixL();
}

// Clamp a symmetric matrix to PSD by zeroing negative eigenvalues.
inline MatX clamp_psd(const MatX& m) {
  Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (m + m.transpose()));
  VecX ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

struct UtJoint {
  VecX y_mean;
  MatX p_xx;  // sigma-point state covariance (== prior up to round-off)
  MatX p_xy;
  MatX p_yy;
};

// Joint (x, y=h(x)) statistics from the UT over a NavState belief.
template <typename H>
UtJoint unscented_joint(const Belief& belief, H&& h, int ny) {
  const int n = kStateDof;
  const UtWeights w = UtWeights::make(n);
  const MatX s = chol_with_jitter(belief.cov);
  const double scale = std::sqrt(n + w.lambda);

  std::vector<Vec15> dx(2 * n + 1, Vec15::Zero());
  std::vector<VecX> y(2 * n + 1);
  y[0] = h(belief.mean);
  for (int i = 0; i < n; ++i) {
    dx[1 + i] = scale * s.col(i);
    dx[1 + n + i] = -scale * s.col(i);
    y[1 + i] = h(oplus(belief.mean, dx[1 + i]));
    y[1 + n + i] = h(oplus(belief.mean, dx[1 + n + i]));
  }

  UtJoint out;
  out.y_mean = w.wm0 * y[0];
  for (int i = 1; i <= 2 * n; ++i) out.y_mean += w.wi * y[i];

  out.p_xx = MatX::Zero(n, n);
  out.p_xy = MatX::Zero(n, ny);
  out.p_yy = MatX::Zero(ny, ny);
  for (int i = 0; i <= 2 * n; ++i) {
    const double wc = (i == 0) ? w.wc0 : w.wi;
    const VecX dy = y[i] - out.y_mean;
    out.p_xx += wc * dx[i] * dx[i].transpose();
    out.p_xy += wc * dx[i] * dy.transpose();
    out.p_yy += wc * dy * dy.transpose();
  }
  symmetrize(out.p_xx);
  symmetrize(out.p_yy);
  return out;
}

// Unscented pseudo-measurement update with additive noise covariance r.
template <typename H>
Belief unscented_update(const Belief& belief, H&& h, const VecX& z,
                        const MatX& r) {
  const int ny = static_cast<int>(z.size());
  UtJoint j = unscented_joint(belief, std::forward<H>(h), ny);
  const MatX s = j.p_yy + r;
  const MatX k = s.ldlt().solve(j.p_xy.transpose()).transpose();
  Belief post;
  post.mean = oplus(belief.mean, Vec15(k * (z - j.y_mean)));
  post.cov = belief.cov - k * s * k.transpose();
  post.symmetrize_cov();
  return post;
}

// Innovation NIS of a candidate pseudo-measurement (used for gating before
// the update is applied).
template <typename H>
double unscented_nis(const Belief& belief, H&& h, const VecX& z, const MatX& r) {
  const int ny = static_cast<int>(z.size());
  UtJoint j = unscented_joint(belief, std::forward<H>(h), ny);
  const VecX nu = z - j.y_mean;
  return nu.dot((j.p_yy + r).ldlt().solve(nu));
}

}  // namespace tcnav
