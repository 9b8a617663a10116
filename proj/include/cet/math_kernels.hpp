#pragma once

#include "cet/types.hpp"

namespace cet {

/// 2x2 correlation matrix [[1, rho], [rho, 1]].
struct CorrelationMatrix2 {
  double rho = 0.0;
};

/// Digamma function psi(x) for x > 0. Absolute error <= 1e-10 on [1e-3, 1e6].
double digamma(double x);

/// Standard normal CDF Phi(x). Absolute error <= 1e-9.
double std_normal_cdf(double x);

/// Standard normal quantile Phi^{-1}(p) for p in (0, 1).
/// Satisfies |Phi(result) - p| <= 1e-8 and is strictly increasing in p.
double std_normal_quantile(double p);

/// Exponential quantile -ln(1-p)/rate for p in [0, 1), rate > 0.
double exponential_quantile(double p, double rate);

/// Lower-triangular Cholesky factor of [[1, rho], [rho, 1]]:
/// L = [[1, 0], [rho, sqrt(1 - rho^2)]]. Admits |rho| = 1 (degenerate factor).
Matrix2 cholesky2(const CorrelationMatrix2& corr);

}  // namespace cet
