#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "tcnav/ambiguity.hpp"
#include "tcnav/rng.hpp"

using namespace tcnav;

namespace {

// Exhaustive k-best enumeration over the box [lo, hi]^dim with the same
// (cost, lex) ordering as the sphere search. Independent oracle: no
// decorrelation, no pruning.
std::vector<IlsCandidate> brute_force_kbest(const IlsProblem& p, int k, int lo,
                                            int hi) {
  const int n = p.dim();
  std::vector<IlsCandidate> best;
  auto insert = [&](const VecXi& cand, double cost) {
    IlsCandidate c{cand, cost};
    auto pos = std::upper_bound(best.begin(), best.end(), c,
                                [](const IlsCandidate& a, const IlsCandidate& b) {
                                  if (a.cost != b.cost) return a.cost < b.cost;
                                  return tcnav::detail::lex_less(a.n, b.n);
                                });
    best.insert(pos, std::move(c));
    if (static_cast<int>(best.size()) > k) best.pop_back();
  };
  VecXi cur = VecXi::Zero(n);
  // Depth-first over levels n-1..0 with incremental partial costs.
  std::function<void(int, double)> walk = [&](int i, double partial) {
    double t = p.nu(i);
    for (int j = i + 1; j < n; ++j) t -= p.r_nn(i, j) * cur(j);
    for (int v = lo; v <= hi; ++v) {
      cur(i) = v;
      const double d = t - p.r_nn(i, i) * v;
      const double c = partial + d * d;
      if (i == 0) {
        insert(cur, c);
      } else {
        walk(i - 1, c);
      }
    }
  };
  walk(n - 1, 0.0);
  return best;
}

IlsProblem random_problem(int dim, Rng& rng, VecXi* n_true = nullptr) {
  IlsProblem p;
  p.r_nn = MatX::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    p.r_nn(i, i) = rng.uniform(0.4, 2.5);
    for (int j = i + 1; j < dim; ++j) p.r_nn(i, j) = 0.8 * rng.normal();
  }
  VecXi nt(dim);
  for (int i = 0; i < dim; ++i) nt(i) = rng.uniform_int(-5, 5);
  p.nu = p.r_nn * nt.cast<double>() + 0.5 * rng.normal_vec(dim);
  if (n_true) *n_true = nt;
  return p;
}

}  // namespace

TEST(Decorrelate, DiagonalInputGivesPermutation) {
  MatX r = MatX::Zero(3, 3);
  r.diagonal() << 3.0, 0.5, 1.5;
  const Decorrelation d = decorrelate(r);
  // Z is a signed permutation: exactly one +-1 per row/column.
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(d.z.col(i).cwiseAbs().sum(), 1.0, 1e-12);
    EXPECT_NEAR(d.z.row(i).cwiseAbs().sum(), 1.0, 1e-12);
  }
  EXPECT_NEAR(std::abs(d.z.determinant()), 1.0, 1e-12);
}

TEST(Decorrelate, ImprovesConditioning) {
  // 2-D with correlation 0.99.
  MatX q(2, 2);
  q << 1.0, 0.99, 0.99, 1.0;
  // R with R^T R = Q^-1 (information factor).
  const MatX qinv = q.inverse();
  Eigen::LLT<MatX> llt(qinv);
  MatX r = MatX(llt.matrixU());
  const Decorrelation d = decorrelate(r);
  auto cond = [](const MatX& m) {
    Eigen::JacobiSVD<MatX> svd(m.transpose() * m);
    return svd.singularValues()(0) / svd.singularValues()(1);
  };
  EXPECT_LT(cond(d.r_bar), cond(r));
}

TEST(Decorrelate, UnimodularInteger) {
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const int dim = rng.uniform_int(2, 8);
    const IlsProblem p = random_problem(dim, rng);
    const Decorrelation d = decorrelate(p.r_nn);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        EXPECT_NEAR(d.z(i, j), std::round(d.z(i, j)), 1e-9);
        EXPECT_NEAR(d.z_inv(i, j), std::round(d.z_inv(i, j)), 1e-9);
      }
    }
    EXPECT_NEAR(std::abs(d.z.determinant()), 1.0, 1e-6);
    EXPECT_LT((d.z * d.z_inv - MatX::Identity(dim, dim)).norm(), 1e-9);
    // R_bar spans the same lattice: same |det|.
    const double det_in = std::abs(p.r_nn.diagonal().prod());
    const double det_out = std::abs(d.r_bar.diagonal().prod());
    EXPECT_NEAR(det_out / det_in, 1.0, 1e-9);
  }
}

TEST(Decorrelate, SingularInputThrows) {
  MatX r = MatX::Zero(2, 2);
  r(0, 0) = 1.0;
  EXPECT_THROW(decorrelate(r), NumericalError);
}

TEST(IlsSearch, ScalarRounding) {
  IlsProblem p;
  p.r_nn = MatX::Ones(1, 1);
  p.nu = VecX::Ones(1) * 2.3;
  const IlsSolution s = ils_search(p, 2);
  EXPECT_EQ(s.best().n(0), 2);
  EXPECT_NEAR(s.best().cost, 0.09, 1e-12);
  EXPECT_EQ(s.second().n(0), 3);
  EXPECT_NEAR(s.second().cost, 0.49, 1e-12);
}

TEST(IlsSearch, ExactLatticePointHasZeroCost) {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    const int dim = rng.uniform_int(1, 6);
    IlsProblem p = random_problem(dim, rng);
    VecXi m(dim);
    for (int i = 0; i < dim; ++i) m(i) = rng.uniform_int(-8, 8);
    p.nu = p.r_nn * m.cast<double>();
    const IlsSolution s = ils_search(p, 2);
    EXPECT_EQ((s.best().n - m).cwiseAbs().maxCoeff(), 0);
    EXPECT_LT(s.best().cost, 1e-18);
    EXPECT_GT(s.second().cost, 1e-6);
  }
}

TEST(IlsSearch, MatchesBruteForceEnumeration) {
  Rng rng(33);
  for (int t = 0; t < 120; ++t) {
    const int dim = 1 + (t % 4);
    const IlsProblem p = random_problem(dim, rng);
    const IlsSolution s = ils_search(p, 2);
    const auto bf = brute_force_kbest(p, 2, -20, 20);
    ASSERT_EQ(bf.size(), 2u);
    EXPECT_EQ((s.best().n - bf[0].n).cwiseAbs().maxCoeff(), 0)
        << "dim=" << dim << " t=" << t;
    EXPECT_EQ((s.second().n - bf[1].n).cwiseAbs().maxCoeff(), 0)
        << "dim=" << dim << " t=" << t;
    EXPECT_NEAR(s.best().cost, bf[0].cost, 1e-10);
    EXPECT_NEAR(s.second().cost, bf[1].cost, 1e-10);
  }
}

TEST(IlsSearch, BestBeatsRoundedFloat) {
  Rng rng(34);
  for (int t = 0; t < 50; ++t) {
    const int dim = rng.uniform_int(1, 8);
    const IlsProblem p = random_problem(dim, rng);
    const IlsSolution s = ils_search(p, 2);
    const VecX nf = p.r_nn.triangularView<Eigen::Upper>().solve(p.nu);
    VecXi rounded(dim);
    for (int i = 0; i < dim; ++i) rounded(i) = static_cast<int>(std::llround(nf(i)));
    EXPECT_LE(s.best().cost, ils_cost(p, rounded) + 1e-12);
  }
}

TEST(IlsSearch, CostsInvariantUnderDecorrelation) {
  Rng rng(35);
  for (int t = 0; t < 30; ++t) {
    const int dim = rng.uniform_int(2, 8);
    const IlsProblem p = random_problem(dim, rng);
    const IlsSolution s = ils_search(p, 2);
    // Recompute candidate costs in the reduced coordinates.
    const Decorrelation d = decorrelate(p.r_nn);
    const VecX nf = p.r_nn.triangularView<Eigen::Upper>().solve(p.nu);
    const VecX mf = d.z_inv * nf;
    for (const auto& c : s.candidates) {
      const VecX m = d.z_inv * c.n.cast<double>();
      const double cost_red = (d.r_bar * (m - mf)).squaredNorm();
      EXPECT_NEAR(cost_red, c.cost, 1e-10 * (1.0 + c.cost));
    }
  }
}

TEST(IlsSearch, CandidatesDistinctAndOrdered) {
  Rng rng(36);
  for (int t = 0; t < 20; ++t) {
    const IlsProblem p = random_problem(5, rng);
    const IlsSolution s = ils_search(p, 4);
    ASSERT_EQ(s.candidates.size(), 4u);
    for (size_t i = 1; i < s.candidates.size(); ++i) {
      EXPECT_LE(s.candidates[i - 1].cost, s.candidates[i].cost);
      EXPECT_GT((s.candidates[i].n - s.candidates[i - 1].n).cwiseAbs().maxCoeff(), 0);
    }
  }
}

TEST(ApertureTest, TieRejectsAndLargeSeparationAccepts) {
  ApertureThresholdTable table;
  IlsSolution s;
  s.boot_failure = 1.0;  // bucket 0
  table.insert(3, 0, 0.01, 2.5);
  IlsCandidate a, b;
  a.n = VecXi::Zero(3);
  b.n = VecXi::Ones(3);
  a.cost = 1.0;
  b.cost = 1.0;
  s.candidates = {a, b};
  EXPECT_FALSE(aperture_test(s, 3, 0.01, table).accepted);
  s.candidates[1].cost = 1e9;
  EXPECT_TRUE(aperture_test(s, 3, 0.01, table).accepted);
}

TEST(ApertureTest, MissingEntryRejectsConservatively) {
  ApertureThresholdTable table;
  table.insert(3, 0, 0.01, 2.5);
  IlsSolution s;
  s.boot_failure = 1.0;
  IlsCandidate a, b;
  a.n = VecXi::Zero(4);
  b.n = VecXi::Ones(4);
  b.cost = 1e9;
  s.candidates = {a, b};
  const ApertureDecision d = aperture_test(s, 4, 0.01, table);  // dof missing
  EXPECT_FALSE(d.accepted);
  EXPECT_FALSE(d.table_hit);
  const ApertureDecision d2 = aperture_test(s, 3, 0.001, table);  // pf missing
  EXPECT_FALSE(d2.accepted);
  EXPECT_FALSE(d2.table_hit);
}

TEST(ApertureTest, MonotoneInSeparation) {
  ApertureThresholdTable table;
  table.insert(2, 0, 0.01, 1.0);
  IlsSolution s;
  s.boot_failure = 1.0;
  IlsCandidate a, b;
  a.n = VecXi::Zero(2);
  b.n = VecXi::Ones(2);
  a.cost = 0.5;
  bool was_accepted = false;
  for (double sep : {0.0, 0.5, 0.99, 1.01, 2.0, 10.0}) {
    s.candidates = {a, b};
    s.candidates[1].cost = a.cost + sep;
    const bool acc = aperture_test(s, 2, 0.01, table).accepted;
    EXPECT_TRUE(!was_accepted || acc) << "accept flipped back at sep=" << sep;
    was_accepted = acc;
  }
  EXPECT_TRUE(was_accepted);
}

TEST(TableIo, CsvRoundTrip) {
  ApertureThresholdTable t;
  t.insert(3, -1, 0.01, 1.25);
  t.insert(14, -4, 0.001, 7.5);
  const std::string path = ::testing::TempDir() + "/aperture_tbl.csv";
  t.save_csv(path);
  const ApertureThresholdTable u = ApertureThresholdTable::load_csv(path);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_NEAR(*u.lookup(3, std::pow(10.0, -0.5), 0.01), 1.25, 1e-12);
  EXPECT_NEAR(*u.lookup(14, 1e-2, 0.001), 7.5, 1e-12);
  EXPECT_FALSE(u.lookup(5, 1.0, 0.01).has_value());
}

// Monte Carlo calibration oracle: thresholds built per (dof, strength bucket)
// hold the empirical failure rate at or below the target on fresh problems
// from the calibration ensemble. This mirrors how the shipped table is built.
TEST(ApertureCalibration, FailureRateHeldOnFreshProblems) {
  ApertureCalibrationSpec spec;
  spec.dof_min = spec.dof_max = 6;
  spec.bucket_min = -3;
  spec.bucket_max = -1;
  spec.pf_targets = {0.01};
  spec.samples = 100000;
  spec.matrices = 20;
  spec.seed = 991;
  const ApertureThresholdTable table = calibrate_aperture(spec);

  const int bucket = -2;  // bootstrapped failure ~0.1
  const double target_failure = std::pow(10.0, 0.5 * bucket);
  Rng rng(2024);  // fresh seed, same ensemble
  int total = 0, accepted = 0, accepted_wrong = 0, wrong = 0;
  const int trials = 100000;
  const int per_matrix = 5000;
  for (int t = 0; t < trials; ++t) {
    static MatX r;
    if (t % per_matrix == 0) r = tcnav::detail::random_failure_factor(6, target_failure, rng);
    IlsProblem p;
    p.r_nn = r;
    p.nu = rng.normal_vec(6);
    const IlsSolution sol = ils_search(p, 2);
    const bool is_wrong = (sol.best().n.array() != 0).any();
    const ApertureDecision d = aperture_test(sol, 6, 0.01, table);
    ++total;
    wrong += is_wrong;
    accepted += d.accepted;
    accepted_wrong += (d.accepted && is_wrong);
  }
  const double p_fail = static_cast<double>(accepted_wrong) / total;
  EXPECT_LE(p_fail, 1.5 * 0.01) << "accepted=" << accepted << " wrong=" << wrong;
  // The test must actually be doing work: the raw ILS error rate exceeds the
  // target and some fixes are accepted.
  EXPECT_GT(static_cast<double>(wrong) / total, 0.01);
  EXPECT_GT(accepted, total / 50);
}
