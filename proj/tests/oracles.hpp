// Test-only oracles, kept independent of the library implementation paths
// they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

// Digamma via a five-point central difference of std::lgamma. Truncation
// ~h^4, roundoff ~eps/h; h = 1e-3 lands both below 1e-9 on moderate x.
inline double digamma_lgamma_diff(double x) {
  double shift = 0.0;
  while (x < 1.0) {  // keep the stencil away from the pole at 0
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double h = 1e-3 * std::max(1.0, x * 1e-3);
  return shift + (-std::lgamma(x + 2 * h) + 8 * std::lgamma(x + h) -
                  8 * std::lgamma(x - h) + std::lgamma(x - 2 * h)) /
                     (12 * h);
}

// Normal CDF by Simpson quadrature of the density over [0, x].
inline double normal_cdf_quadrature(double x) {
  const double sign = x < 0 ? -1.0 : 1.0;
  const double ax = std::abs(x);
  const int n = 2000;  // even
  const double h = ax / n;
  auto pdf = [](double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * M_PI);
  };
  double sum = pdf(0.0) + pdf(ax);
  for (int i = 1; i < n; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * pdf(i * h);
  }
  return 0.5 + sign * sum * h / 3.0;
}

// Quantile by bisection on the quadrature CDF.
inline double normal_quantile_bisection(double p) {
  double lo = -10.0, hi = 10.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (normal_cdf_quadrature(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// k-th nearest neighbor max-norm distances by full sort of all pairwise
// distances per point.
inline Eigen::VectorXd knn_full_sort(const Eigen::MatrixXd& points, int k) {
  const auto n = points.rows();
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    std::vector<double> dists;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      double d = 0.0;
      for (Eigen::Index c = 0; c < points.cols(); ++c) {
        d = std::max(d, std::abs(points(i, c) - points(j, c)));
      }
      dists.push_back(d);
    }
    std::sort(dists.begin(), dists.end());
    out[i] = dists[static_cast<size_t>(k) - 1];
  }
  return out;
}

// Transcription of the neighbor-distance entropy formula with its own
// distance loop; checks the production estimator end to end.
inline double kl_entropy_transcription(const Eigen::MatrixXd& points, int k) {
  const auto n = points.rows();
  const auto d = points.cols();
  const Eigen::VectorXd eps = knn_full_sort(points, k);
  double log_sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eps[i] <= 0.0) throw std::runtime_error("oracle: zero neighbor distance");
    log_sum += std::log(2.0 * eps[i]);
  }
  return -digamma_lgamma_diff(static_cast<double>(k)) +
         digamma_lgamma_diff(static_cast<double>(n)) +
         static_cast<double>(d) / static_cast<double>(n) * log_sum;
}

// Closed-form copula entropy of a bivariate Gaussian with correlation rho.
inline double gaussian_copula_entropy(double rho) {
  return 0.5 * std::log(1.0 - rho * rho);
}

template <typename A, typename B>
bool exact_equal(const A& a, const B& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Spearman rank correlation; assumes tie-free inputs.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const size_t n = a.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return v[x] < v[y]; });
    std::vector<double> r(n);
    for (size_t i = 0; i < n; ++i) r[order[i]] = static_cast<double>(i + 1);
    return r;
  };
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  double d2 = 0.0;
  for (size_t i = 0; i < n; ++i) {
    d2 += (ra[i] - rb[i]) * (ra[i] - rb[i]);
  }
  const double nn = static_cast<double>(n);
  return 1.0 - 6.0 * d2 / (nn * (nn * nn - 1.0));
}

}  // namespace oracles
