#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace cet {

// One row per observation, one column per coordinate.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Matrix2 = Eigen::Matrix2d;
using Vector2 = Eigen::Vector2d;

using Index = Eigen::Index;

}  // namespace cet
