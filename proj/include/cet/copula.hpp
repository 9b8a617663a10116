#pragma once

#include "cet/types.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cet {

enum class TiePolicy {
  kDistinctRandom,  // break ties with seeded jitter; ranks are a permutation of 1..n
  kAverage,         // tied values share the mean rank of their block
};

struct EstimatorConfig {
  int k = 3;
  TiePolicy tie_policy = TiePolicy::kDistinctRandom;
  double jitter_scale = 1e-10;
  std::uint64_t seed = 0;
};

/// Raised by kl_entropy when a k-th neighbor distance is exactly zero,
/// i.e. the point set contains duplicated rows.
class DuplicatePointError : public std::runtime_error {
 public:
  DuplicatePointError(std::string msg, std::vector<Index> indices)
      : std::runtime_error(std::move(msg)), indices_(std::move(indices)) {}
  const std::vector<Index>& indices() const { return indices_; }

 private:
  std::vector<Index> indices_;
};

/// Column-wise empirical-copula transform: ranks divided by n, entries in (0, 1].
/// Under kDistinctRandom, ties are broken by seeded jitter before ranking so each
/// column is a permutation of {1/n, ..., n/n}; deterministic given (sample, cfg).
Matrix rank_transform(const Eigen::Ref<const Matrix>& sample,
                      const EstimatorConfig& cfg);

/// Kozachenko-Leonenko entropy in nats with Chebyshev neighbor distances:
///   H = -psi(k) + psi(n) + (d/n) * sum_i log(2 * eps_i).
double kl_entropy(const Eigen::Ref<const Matrix>& points, int k);

/// Variant of kl_entropy for points supported on the unit cube: each
/// neighbor ball's log-volume is truncated at the cube faces, removing the
/// boundary bias that otherwise dominates at moderate n. Identical to
/// kl_entropy for points whose balls stay interior.
double kl_entropy_unit_support(const Eigen::Ref<const Matrix>& points, int k);

/// Copula entropy of a sample: neighbor-distance entropy of its rank
/// transform, with the unit-cube support correction (pseudo-observations
/// always lie in (0, 1]^d).
double copula_entropy(const Eigen::Ref<const Matrix>& sample,
                      const EstimatorConfig& cfg);

/// Mutual information estimate, the negative of copula_entropy.
double mutual_information(const Eigen::Ref<const Matrix>& sample,
                          const EstimatorConfig& cfg);

}  // namespace cet
