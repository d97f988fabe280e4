#pragma once

// Scalar statistics helpers: regularized incomplete gamma, chi-square
// CDF/quantile (stable out to the 1 - 1e-30 tail), standard normal quantile.
// The extreme chi-square quantiles are solved on the upper-tail side with a
// Wilson-Hilferty starting point and Newton refinement; a naive CDF inversion
// underflows long before the 1e-15 tail probabilities used by the false-fix
// and ZUPT gates.

#include <cmath>
#include <limits>

#include "tcnav/core.hpp"

namespace tcnav {

namespace detail {

// Lanczos log-gamma (g=7, n=9), |err| < 1e-13 for x > 0.
inline double log_gamma(double x) {
  static const double c[9] = {0.99999999999980993,  676.5203681218851,
                              -1259.1392167224028,  771.32342877765313,
                              -176.61502916214059,  12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (x < 0.5) {
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  x -= 1.0;
  double a = c[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  return 0.5 * std::log(2.0 * M_PI) + (x + 0.5) * std::log(t) - t + std::log(a);
}

// Series for the lower regularized incomplete gamma P(a,x), x < a+1.
inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Continued fraction for the upper regularized incomplete gamma Q(a,x), x >= a+1.
inline double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
}

}  // namespace detail

// Lower regularized incomplete gamma P(a,x) = gamma(a,x)/Gamma(a).
inline double gamma_p(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw NumericalError("gamma_p: bad arguments");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return detail::gamma_p_series(a, x);
  return 1.0 - detail::gamma_q_cf(a, x);
}

inline double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw NumericalError("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_cf(a, x);
}

inline double chi2_cdf(double x, double dof) { return gamma_p(0.5 * dof, 0.5 * x); }
inline double chi2_sf(double x, double dof) { return gamma_q(0.5 * dof, 0.5 * x); }

inline double chi2_pdf(double x, double dof) {
  if (x <= 0.0) return 0.0;
  const double a = 0.5 * dof;
  return std::exp((a - 1.0) * std::log(x) - 0.5 * x - a * std::log(2.0) -
                  detail::log_gamma(a));
}

// Standard normal quantile (Acklam's rational approximation plus one Halley
// step); relative error well below 1e-12 across (0,1).
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw NumericalError("normal_quantile: p outside (0,1)");
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement against erfc.
  const double e = 0.5 * std::erfc(-x / M_SQRT2) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

// Quantile of chi-square(dof) at upper-tail probability q, i.e. the x with
// SF(x) = q. Stated this way so q = 1e-30 stays representable.
inline double chi2_quantile_upper(double dof, double q) {
  if (!(dof > 0.0)) throw NumericalError("chi2_quantile_upper: dof <= 0");
  if (!(q > 0.0 && q < 1.0)) throw NumericalError("chi2_quantile_upper: q outside (0,1)");
  // Wilson-Hilferty start.
  double z;
  if (q < 1e-300) {
    z = 40.0;
  } else {
    z = -normal_quantile(std::min(1.0 - 1e-16, q));  // upper-tail normal deviate
  }
  const double h = 2.0 / (9.0 * dof);
  double x = dof * std::pow(std::max(1e-6, 1.0 - h + z * std::sqrt(h)), 3.0);
  if (x <= 0.0) x = 1e-6;
  // Newton on SF(x) - q = 0 in log space for tail robustness:
  // d/dx log SF = -pdf/SF.
  for (int it = 0; it < 100; ++it) {
    const double sf = chi2_sf(x, dof);
    const double pdf = chi2_pdf(x, dof);
    if (pdf <= 0.0 || sf <= 0.0) break;
    const double step = (std::log(sf) - std::log(q)) * sf / pdf;
    double xn = x + step;
    if (xn <= 0.0) xn = 0.5 * x;
    if (std::abs(xn - x) < 1e-12 * (1.0 + x)) {
      x = xn;
      break;
    }
    x = xn;
  }
  return x;
}

// Quantile at lower-tail probability p (SF = 1-p).
inline double chi2_quantile(double dof, double p) {
  if (!(p > 0.0 && p < 1.0)) throw NumericalError("chi2_quantile: p outside (0,1)");
  return chi2_quantile_upper(dof, 1.0 - p);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / M_SQRT2); }

}  // namespace tcnav
