#include "cet/knn.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cet {

double chebyshev_dist(const Eigen::Ref<const Vector>& a,
                      const Eigen::Ref<const Vector>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("chebyshev_dist: dimension mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

Vector kth_neighbor_distances(const Eigen::Ref<const Matrix>& points, int k) {
  const Index n = points.rows();
  if (k < 1 || k >= n) {
    throw std::invalid_argument("kth_neighbor_distances: require 1 <= k <= n-1");
  }
  // O(n^2) scan; n is small (500 in all simulation presets) and this is the
  // reference path any accelerated index must match exactly.
  Vector result(n);
  std::vector<double> dists(static_cast<size_t>(n) - 1);
  for (Index i = 0; i < n; ++i) {
    size_t m = 0;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      dists[m++] = (points.row(i) - points.row(j)).cwiseAbs().maxCoeff();
    }
    std::nth_element(dists.begin(), dists.begin() + (k - 1), dists.end());
    result[i] = dists[static_cast<size_t>(k) - 1];
  }
  return result;
}

}  // namespace cet
