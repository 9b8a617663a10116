#include "cet/math_kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace cet {

double digamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("digamma: x must be positive and finite");
  }
  // Upward recurrence psi(x) = psi(x+1) - 1/x until x >= 10, then the
  // asymptotic expansion psi(x) ~ ln x - 1/(2x) - sum B_{2k}/(2k x^{2k}).
  double result = 0.0;
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv;
  result -= inv2 * (1.0 / 12.0 -
            inv2 * (1.0 / 120.0 -
            inv2 * (1.0 / 252.0 -
            inv2 * (1.0 / 240.0 -
            inv2 * (1.0 / 132.0)))));
  return result;
}

double std_normal_cdf(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("std_normal_cdf: x must be finite");
  }
  return 0.5 * std::erfc(-x * M_SQRT1_2);
}

namespace {

// Acklam's rational approximation for the normal quantile, |error| < 1.15e-9.
double normal_quantile_approx(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("std_normal_quantile: p must lie in (0, 1)");
  }
  double x = normal_quantile_approx(p);
  // One Newton step against the CDF tightens the approximation well below 1e-8.
  const double e = std_normal_cdf(x) - p;
  const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
  if (pdf > 0.0) {
    x -= e / pdf;
  }
  return x;
}

double exponential_quantile(double p, double rate) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::domain_error("exponential_quantile: p must lie in [0, 1)");
  }
  if (!(rate > 0.0)) {
    throw std::domain_error("exponential_quantile: rate must be positive");
  }
  return -std::log1p(-p) / rate;
}

Matrix2 cholesky2(const CorrelationMatrix2& corr) {
  if (!(std::abs(corr.rho) <= 1.0)) {
    throw std::domain_error("cholesky2: |rho| must not exceed 1");
  }
  Matrix2 L;
  L << 1.0, 0.0, corr.rho, std::sqrt(1.0 - corr.rho * corr.rho);
  return L;
}

}  // namespace cet
