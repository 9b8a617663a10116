#pragma once

#include "cet/copula.hpp"
#include "cet/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cet {

enum class Hypothesis { kH0, kH1 };

/// The labeling column for the pooled sample: all ones under H0, group
/// indicator (m zeros then n ones) under H1.
struct LabelVector {
  Vector labels;
  Hypothesis hypothesis;
  Index m = 0;
  Index n = 0;
};

struct KernelConfig {
  double delta = 1.0;
  enum class Variant { kBiased, kUnbiased } variant = Variant::kBiased;
};

struct TestResult {
  double statistic = 0.0;
  std::optional<double> p_value;
  std::vector<double> permutation_stats;
  std::uint64_t permutation_seed = 0;
};

LabelVector build_labels(Index m, Index n, Hypothesis hypothesis);

/// Copula-entropy test statistic: CE of the pooled sample stacked with the
/// null labeling minus CE stacked with the group labeling. Near zero when the
/// samples share a distribution, large under separation.
double tce_statistic(const Eigen::Ref<const Matrix>& x1,
                     const Eigen::Ref<const Matrix>& x2,
                     const EstimatorConfig& cfg);

/// Mutual-information baseline: MI between the pooled sample and the group
/// labeling, computed as -(CE(X, Y1) - CE(X)).
double tmi_statistic(const Eigen::Ref<const Matrix>& x1,
                     const Eigen::Ref<const Matrix>& x2,
                     const EstimatorConfig& cfg);

/// exp(-||a - b||^2 / (2 delta^2)).
double gaussian_kernel(const Eigen::Ref<const Vector>& a,
                       const Eigen::Ref<const Vector>& b, double delta);

/// Squared maximum mean discrepancy with a Gaussian kernel. The biased
/// variant keeps diagonal terms and is always >= 0; the unbiased variant
/// excludes them and needs at least two points per group.
double mmd2_statistic(const Eigen::Ref<const Matrix>& x1,
                      const Eigen::Ref<const Matrix>& x2,
                      const KernelConfig& kc);

/// Energy-distance test statistic T = (mn/(m+n)) * E with
/// E = (2/mn) sum ||x-y|| - (1/m^2) sum ||x-x'|| - (1/n^2) sum ||y-y'||.
double energy_statistic(const Eigen::Ref<const Matrix>& x1,
                        const Eigen::Ref<const Matrix>& x2);

using TwoSampleStatistic =
    std::function<double(const Eigen::Ref<const Matrix>&,
                         const Eigen::Ref<const Matrix>&)>;

/// Permutation calibration: re-evaluates the statistic on B uniformly random
/// reassignments of the pooled rows into groups of sizes m and n, and returns
/// p = (1 + #{permuted >= observed}) / (B + 1). Each replicate derives its
/// randomness from (seed, replicate index).
TestResult permutation_pvalue(const TwoSampleStatistic& stat,
                              const Eigen::Ref<const Matrix>& x1,
                              const Eigen::Ref<const Matrix>& x2, int B,
                              std::uint64_t seed);

}  // namespace cet
