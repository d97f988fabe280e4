#include <gtest/gtest.h>

#include <cmath>

#include "tcnav/stats.hpp"

using namespace tcnav;

// Reference quantiles computed independently (scipy.stats, double precision).
TEST(Chi2Quantile, MatchesReferenceValues) {
  EXPECT_NEAR(chi2_quantile(3, 0.95), 7.814727903251179, 1e-9);
  EXPECT_NEAR(chi2_quantile(1, 0.5), 0.454936423119572, 1e-10);
  EXPECT_NEAR(chi2_quantile(5, 0.01), 0.5542980767282772, 1e-10);
  EXPECT_NEAR(chi2_quantile_upper(3, 1e-6), 30.664849706213598, 1e-6);
  EXPECT_NEAR(chi2_quantile_upper(10, 1e-15), 93.66879161482838, 1e-6);
  EXPECT_NEAR(chi2_quantile_upper(100, 1e-15), 256.63497366715245, 1e-6);
  EXPECT_NEAR(chi2_quantile_upper(250, 1e-15), 470.9346173121856, 1e-6);
  EXPECT_NEAR(chi2_quantile_upper(3, 1e-30), 142.67798622346095, 1e-6);
}

TEST(Chi2Quantile, WilsonHilfertyCrossCheck) {
  // The WH cube approximation should land within a few percent for moderate
  // tails; the refined quantile must stay close to it.
  for (double dof : {10.0, 40.0, 100.0, 300.0}) {
    for (double q : {1e-3, 1e-9, 1e-15}) {
      const double z = -normal_quantile(q);
      const double h = 2.0 / (9.0 * dof);
      const double wh = dof * std::pow(1.0 - h + z * std::sqrt(h), 3.0);
      const double exact = chi2_quantile_upper(dof, q);
      EXPECT_NEAR(exact / wh, 1.0, 0.12) << "dof=" << dof << " q=" << q;
    }
  }
}

TEST(Chi2Quantile, RoundTripThroughSf) {
  for (double dof : {1.0, 3.0, 14.0, 120.0}) {
    for (double q : {0.3, 1e-2, 1e-8, 1e-15}) {
      const double x = chi2_quantile_upper(dof, q);
      EXPECT_NEAR(chi2_sf(x, dof) / q, 1.0, 1e-8);
    }
  }
}

TEST(Chi2Quantile, MonotoneInTail) {
  double prev = 0.0;
  for (double q : {1e-2, 1e-4, 1e-8, 1e-12, 1e-20, 1e-30}) {
    const double x = chi2_quantile_upper(14, q);
    EXPECT_GT(x, prev);
    prev = x;
  }
}

TEST(Chi2Cdf, KnownMoments) {
  // CDF at the mean of chi2(k) approaches ~0.5 from above as k grows.
  EXPECT_NEAR(chi2_cdf(2.0, 2.0), 1.0 - std::exp(-1.0), 1e-12);
  EXPECT_NEAR(chi2_cdf(100.0, 100.0), 0.5188083154720433, 1e-9);
}

TEST(NormalQuantile, MatchesReferenceValues) {
  EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-10);
  EXPECT_NEAR(normal_quantile(1e-10), -6.361340902404056, 1e-8);
  EXPECT_NEAR(-normal_quantile(1e-15), 7.941345326170998, 1e-8);
  EXPECT_NEAR(normal_quantile(0.5), 0.0, 1e-12);
}

TEST(NormalQuantile, InvertsCdf) {
  for (double p : {0.01, 0.3, 0.5, 0.9, 0.999}) {
    EXPECT_NEAR(normal_cdf(normal_quantile(p)), p, 1e-12);
  }
}

TEST(Stats, DomainErrors) {
  EXPECT_THROW(chi2_quantile(3, 0.0), NumericalError);
  EXPECT_THROW(chi2_quantile(3, 1.0), NumericalError);
  EXPECT_THROW(normal_quantile(-0.1), NumericalError);
  EXPECT_THROW(gamma_p(-1.0, 1.0), NumericalError);
}
