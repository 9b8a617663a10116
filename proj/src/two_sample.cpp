#include "cet/two_sample.hpp"

#include "cet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cet {

namespace {

Matrix stack_with_labels(const Eigen::Ref<const Matrix>& x1,
                         const Eigen::Ref<const Matrix>& x2,
                         const LabelVector& lv) {
  const Index m = x1.rows();
  const Index n = x2.rows();
  const Index d = x1.cols();
  Matrix stacked(m + n, d + 1);
  stacked.topLeftCorner(m, d) = x1;
  stacked.bottomLeftCorner(n, d) = x2;
  stacked.col(d) = lv.labels;
  return stacked;
}

void check_pair(const Eigen::Ref<const Matrix>& x1,
                const Eigen::Ref<const Matrix>& x2,
                const EstimatorConfig& cfg) {
  if (x1.cols() != x2.cols()) {
    throw std::invalid_argument("two-sample statistic: dimension mismatch");
  }
  if (x1.rows() + x2.rows() < cfg.k + 2) {
    throw std::invalid_argument("two-sample statistic: pooled sample too small");
  }
}

// The label column is binary, so only the distinct-random policy keeps its
// pseudo-observations non-degenerate under the entropy estimator.
EstimatorConfig with_distinct_ties(EstimatorConfig cfg) {
  cfg.tie_policy = TiePolicy::kDistinctRandom;
  return cfg;
}

// Lexicographic order on (rows, cols, entries). The symmetric statistics
// evaluate their arguments in this canonical order so that swapping the
// samples is bit-exact, not merely equal up to summation rounding.
bool canonical_before(const Eigen::Ref<const Matrix>& a,
                      const Eigen::Ref<const Matrix>& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  }
  return true;
}

// The kernel statistics are invariant under row permutations, so sort rows
// lexicographically before accumulating. Equal multisets then produce
// bit-identical sums and the self-statistic cancels to an exact zero.
Matrix sorted_rows(const Eigen::Ref<const Matrix>& x) {
  std::vector<Index> order(static_cast<size_t>(x.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    for (Index j = 0; j < x.cols(); ++j) {
      if (x(a, j) != x(b, j)) return x(a, j) < x(b, j);
    }
    return false;
  });
  Matrix out(x.rows(), x.cols());
  for (Index i = 0; i < x.rows(); ++i) {
    out.row(i) = x.row(order[static_cast<size_t>(i)]);
  }
  return out;
}

}  // namespace

LabelVector build_labels(Index m, Index n, Hypothesis hypothesis) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("build_labels: group sizes must be >= 1");
  }
  LabelVector lv;
  lv.hypothesis = hypothesis;
  lv.m = m;
  lv.n = n;
  lv.labels = Vector::Ones(m + n);
  if (hypothesis == Hypothesis::kH1) {
    lv.labels.head(m).setZero();
  }
  return lv;
}

double tce_statistic(const Eigen::Ref<const Matrix>& x1,
                     const Eigen::Ref<const Matrix>& x2,
                     const EstimatorConfig& cfg) {
  check_pair(x1, x2, cfg);
  const EstimatorConfig ecfg = with_distinct_ties(cfg);
  const auto y0 = build_labels(x1.rows(), x2.rows(), Hypothesis::kH0);
  const auto y1 = build_labels(x1.rows(), x2.rows(), Hypothesis::kH1);
  return copula_entropy(stack_with_labels(x1, x2, y0), ecfg) -
         copula_entropy(stack_with_labels(x1, x2, y1), ecfg);
}

double tmi_statistic(const Eigen::Ref<const Matrix>& x1,
                     const Eigen::Ref<const Matrix>& x2,
                     const EstimatorConfig& cfg) {
  check_pair(x1, x2, cfg);
  const EstimatorConfig ecfg = with_distinct_ties(cfg);
  const auto y1 = build_labels(x1.rows(), x2.rows(), Hypothesis::kH1);
  Matrix pooled(x1.rows() + x2.rows(), x1.cols());
  pooled.topRows(x1.rows()) = x1;
  pooled.bottomRows(x2.rows()) = x2;
  return -(copula_entropy(stack_with_labels(x1, x2, y1), ecfg) -
           copula_entropy(pooled, ecfg));
}

double gaussian_kernel(const Eigen::Ref<const Vector>& a,
                       const Eigen::Ref<const Vector>& b, double delta) {
  if (!(delta > 0.0)) {
    throw std::domain_error("gaussian_kernel: delta must be positive");
  }
  return std::exp(-(a - b).squaredNorm() / (2.0 * delta * delta));
}

namespace {

double mmd2_on_sorted(const Matrix& x1, const Matrix& x2, const KernelConfig& kc) {
  const Index m = x1.rows();
  const Index n = x2.rows();
  const bool unbiased = kc.variant == KernelConfig::Variant::kUnbiased;
  const double inv2d2 = 1.0 / (2.0 * kc.delta * kc.delta);

  double kxx = 0.0, kyy = 0.0, kxy = 0.0;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (unbiased && i == j) continue;
      kxx += std::exp(-(x1.row(i) - x1.row(j)).squaredNorm() * inv2d2);
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (unbiased && i == j) continue;
      kyy += std::exp(-(x2.row(i) - x2.row(j)).squaredNorm() * inv2d2);
    }
  }
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      kxy += std::exp(-(x1.row(i) - x2.row(j)).squaredNorm() * inv2d2);
    }
  }

  // Direct divisions keep mmd2(x, x) exactly zero: the three loop sums are
  // then bit-identical and the correctly rounded quotients cancel.
  const double mm = static_cast<double>(m);
  const double nn = static_cast<double>(n);
  const double txx = unbiased ? kxx / (mm * (mm - 1.0)) : kxx / (mm * mm);
  const double tyy = unbiased ? kyy / (nn * (nn - 1.0)) : kyy / (nn * nn);
  return txx + tyy - (2.0 * kxy) / (mm * nn);
}

double energy_on_sorted(const Matrix& x1, const Matrix& x2) {
  const Index m = x1.rows();
  const Index n = x2.rows();
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      sxy += (x1.row(i) - x2.row(j)).norm();
    }
  }
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      sxx += (x1.row(i) - x1.row(j)).norm();
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      syy += (x2.row(i) - x2.row(j)).norm();
    }
  }
  // As in mmd2_statistic, divisions make the identical-sample case cancel to
  // an exact zero.
  const double mm = static_cast<double>(m);
  const double nn = static_cast<double>(n);
  const double e = (2.0 * sxy) / (mm * nn) - sxx / (mm * mm) - syy / (nn * nn);
  return mm * nn / (mm + nn) * e;
}

}  // namespace

double mmd2_statistic(const Eigen::Ref<const Matrix>& x1,
                      const Eigen::Ref<const Matrix>& x2,
                      const KernelConfig& kc) {
  if (!(kc.delta > 0.0)) {
    throw std::domain_error("mmd2_statistic: delta must be positive");
  }
  const bool unbiased = kc.variant == KernelConfig::Variant::kUnbiased;
  if (x1.rows() < 1 || x2.rows() < 1 ||
      (unbiased && (x1.rows() < 2 || x2.rows() < 2))) {
    throw std::invalid_argument("mmd2_statistic: group too small for variant");
  }
  Matrix a = sorted_rows(x1);
  Matrix b = sorted_rows(x2);
  if (!canonical_before(a, b)) std::swap(a, b);
  return mmd2_on_sorted(a, b, kc);
}

double energy_statistic(const Eigen::Ref<const Matrix>& x1,
                        const Eigen::Ref<const Matrix>& x2) {
  if (x1.rows() < 1 || x2.rows() < 1) {
    throw std::invalid_argument("energy_statistic: empty sample");
  }
  Matrix a = sorted_rows(x1);
  Matrix b = sorted_rows(x2);
  if (!canonical_before(a, b)) std::swap(a, b);
  return energy_on_sorted(a, b);
}

TestResult permutation_pvalue(const TwoSampleStatistic& stat,
                              const Eigen::Ref<const Matrix>& x1,
                              const Eigen::Ref<const Matrix>& x2, int B,
                              std::uint64_t seed) {
  if (B < 1) {
    throw std::invalid_argument("permutation_pvalue: B must be >= 1");
  }
  const Index m = x1.rows();
  const Index n = x2.rows();
  Matrix pooled(m + n, x1.cols());
  pooled.topRows(m) = x1;
  pooled.bottomRows(n) = x2;

  TestResult result;
  result.permutation_seed = seed;
  result.statistic = stat(x1, x2);
  result.permutation_stats.reserve(static_cast<size_t>(B));

  std::vector<Index> idx(static_cast<size_t>(m + n));
  int exceed = 0;
  for (int b = 0; b < B; ++b) {
    SeedStream stream = SeedStream(seed).substream(static_cast<std::uint64_t>(b));
    std::iota(idx.begin(), idx.end(), Index{0});
    // Fisher-Yates over the pooled rows.
    for (size_t i = idx.size() - 1; i > 0; --i) {
      const size_t j = static_cast<size_t>(stream.next_below(i + 1));
      std::swap(idx[i], idx[j]);
    }
    Matrix p1(m, pooled.cols());
    Matrix p2(n, pooled.cols());
    for (Index i = 0; i < m; ++i) p1.row(i) = pooled.row(idx[static_cast<size_t>(i)]);
    for (Index i = 0; i < n; ++i) {
      p2.row(i) = pooled.row(idx[static_cast<size_t>(m + i)]);
    }
    const double s = stat(p1, p2);
    result.permutation_stats.push_back(s);
    if (s >= result.statistic) ++exceed;
  }
  result.p_value = (1.0 + exceed) / (static_cast<double>(B) + 1.0);
  return result;
}

}  // namespace cet
