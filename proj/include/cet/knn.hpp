#pragma once

#include "cet/types.hpp"

namespace cet {

/// Chebyshev (max-norm) distance between two equal-length vectors.
double chebyshev_dist(const Eigen::Ref<const Vector>& a,
                      const Eigen::Ref<const Vector>& b);

/// For each row of `points`, the Chebyshev distance to its k-th nearest
/// other row (self excluded). Requires 1 <= k <= n-1.
Vector kth_neighbor_distances(const Eigen::Ref<const Matrix>& points, int k);

}  // namespace cet
