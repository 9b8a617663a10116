#include "cet/copula.hpp"

#include "cet/knn.hpp"
#include "cet/math_kernels.hpp"
#include "cet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace cet {

namespace {

void validate_config(const EstimatorConfig& cfg) {
  if (cfg.k < 1) {
    throw std::invalid_argument("EstimatorConfig: k must be >= 1");
  }
  if (!(cfg.jitter_scale >= 0.0)) {
    throw std::invalid_argument("EstimatorConfig: jitter_scale must be >= 0");
  }
}

void validate_sample(const Eigen::Ref<const Matrix>& sample) {
  if (sample.rows() < 2 || sample.cols() < 1) {
    throw std::invalid_argument("sample must have n >= 2 rows and d >= 1 columns");
  }
  if (!sample.allFinite()) {
    throw std::invalid_argument("sample contains non-finite entries");
  }
}

}  // namespace

Matrix rank_transform(const Eigen::Ref<const Matrix>& sample,
                      const EstimatorConfig& cfg) {
  validate_config(cfg);
  validate_sample(sample);
  const Index n = sample.rows();
  const Index d = sample.cols();
  Matrix u(n, d);
  std::vector<Index> order(static_cast<size_t>(n));

  for (Index j = 0; j < d; ++j) {
    const auto col = sample.col(j);
    const double range = col.maxCoeff() - col.minCoeff();

    if (cfg.tie_policy == TiePolicy::kDistinctRandom) {
      // Jitter magnitude scales with the column range so the perturbation can
      // only reorder exact ties (or gaps below jitter_scale * range). The
      // stream is keyed by (seed, column), never ambient state.
      Vector jittered(n);
      SeedStream stream = SeedStream(cfg.seed).substream(static_cast<std::uint64_t>(j));
      const double scale = cfg.jitter_scale * (range > 0.0 ? range : 1.0);
      for (Index i = 0; i < n; ++i) {
        jittered[i] = col[i] + scale * stream.next_uniform();
      }
      std::iota(order.begin(), order.end(), Index{0});
      std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (jittered[a] != jittered[b]) return jittered[a] < jittered[b];
        return a < b;
      });
      for (Index r = 0; r < n; ++r) {
        u(order[static_cast<size_t>(r)], j) =
            static_cast<double>(r + 1) / static_cast<double>(n);
      }
    } else {
      if (range == 0.0 && d == 1) {
        throw std::invalid_argument(
            "rank_transform: zero-variance column under average tie policy is "
            "degenerate (all pseudo-observations equal)");
      }
      std::iota(order.begin(), order.end(), Index{0});
      std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (col[a] != col[b]) return col[a] < col[b];
        return a < b;
      });
      Index r = 0;
      while (r < n) {
        Index block_end = r + 1;
        while (block_end < n &&
               col[order[static_cast<size_t>(block_end)]] ==
                   col[order[static_cast<size_t>(r)]]) {
          ++block_end;
        }
        // Mean of ranks r+1 .. block_end.
        const double mean_rank = 0.5 * static_cast<double>(r + 1 + block_end);
        for (Index i = r; i < block_end; ++i) {
          u(order[static_cast<size_t>(i)], j) = mean_rank / static_cast<double>(n);
        }
        r = block_end;
      }
    }
  }
  return u;
}

namespace {

Vector checked_neighbor_distances(const Eigen::Ref<const Matrix>& points, int k) {
  const Vector eps = kth_neighbor_distances(points, k);
  std::vector<Index> zero_indices;
  for (Index i = 0; i < points.rows(); ++i) {
    if (eps[i] == 0.0) zero_indices.push_back(i);
  }
  if (!zero_indices.empty()) {
    std::ostringstream msg;
    msg << "kl_entropy: zero k-th neighbor distance (duplicated points) at indices";
    for (Index i : zero_indices) msg << ' ' << i;
    msg << "; enable jitter or deduplicate the input";
    throw DuplicatePointError(msg.str(), std::move(zero_indices));
  }
  return eps;
}

}  // namespace

double kl_entropy(const Eigen::Ref<const Matrix>& points, int k) {
  const Index n = points.rows();
  const Index d = points.cols();
  if (n < k + 1) {
    throw std::invalid_argument("kl_entropy: need n >= k + 1");
  }
  const Vector eps = checked_neighbor_distances(points, k);

  double log_sum = 0.0;
  for (Index i = 0; i < n; ++i) {
    log_sum += std::log(2.0 * eps[i]);
  }
  return -digamma(static_cast<double>(k)) + digamma(static_cast<double>(n)) +
         static_cast<double>(d) / static_cast<double>(n) * log_sum;
}

double kl_entropy_unit_support(const Eigen::Ref<const Matrix>& points, int k) {
  const Index n = points.rows();
  const Index d = points.cols();
  if (n < k + 1) {
    throw std::invalid_argument("kl_entropy_unit_support: need n >= k + 1");
  }
  const Vector eps = checked_neighbor_distances(points, k);

  double log_volume_sum = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < d; ++j) {
      const double lo = std::max(points(i, j) - eps[i], 0.0);
      const double hi = std::min(points(i, j) + eps[i], 1.0);
      log_volume_sum += std::log(hi - lo);
    }
  }
  return -digamma(static_cast<double>(k)) + digamma(static_cast<double>(n)) +
         log_volume_sum / static_cast<double>(n);
}

double copula_entropy(const Eigen::Ref<const Matrix>& sample,
                      const EstimatorConfig& cfg) {
  if (sample.rows() < cfg.k + 1) {
    throw std::invalid_argument("copula_entropy: need n >= k + 1");
  }
  return kl_entropy_unit_support(rank_transform(sample, cfg), cfg.k);
}

double mutual_information(const Eigen::Ref<const Matrix>& sample,
                          const EstimatorConfig& cfg) {
  return -copula_entropy(sample, cfg);
}

}  // namespace cet
