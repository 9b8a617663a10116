#include "cet/samplers.hpp"

#include "cet/math_kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace cet {

namespace {

double marginal_quantile(const MarginalSpec& spec, double u) {
  switch (spec.kind) {
    case MarginalSpec::Kind::kStandardNormal:
      return std_normal_quantile(u);
    case MarginalSpec::Kind::kExponential:
      return exponential_quantile(u, spec.rate);
  }
  throw std::logic_error("marginal_quantile: unknown marginal kind");
}

constexpr std::uint64_t kReferenceTag = 0;
constexpr std::uint64_t kComparisonTag = 1;

}  // namespace

Vector sample_std_normal(SeedStream& stream, Index n) {
  if (n < 1) {
    throw std::invalid_argument("sample_std_normal: n must be >= 1");
  }
  Vector z(n);
  for (Index i = 0; i < n; ++i) {
    z[i] = std_normal_quantile(stream.next_uniform());
  }
  return z;
}

Matrix sample_bivariate_normal(SeedStream& stream, Index n, const Vector2& mean,
                               double rho) {
  const Matrix2 L = cholesky2({rho});
  Matrix out(n, 2);
  for (Index i = 0; i < n; ++i) {
    const double z0 = std_normal_quantile(stream.next_uniform());
    const double z1 = std_normal_quantile(stream.next_uniform());
    out(i, 0) = mean[0] + z0;
    out(i, 1) = mean[1] + L(1, 0) * z0 + L(1, 1) * z1;
  }
  return out;
}

Matrix sample_gaussian_copula(SeedStream& stream, Index n, double rho,
                              const MarginalSpec& marginal_a,
                              const MarginalSpec& marginal_b) {
  if (marginal_a.kind == MarginalSpec::Kind::kExponential && !(marginal_a.rate > 0.0)) {
    throw std::domain_error("sample_gaussian_copula: rate must be positive");
  }
  if (marginal_b.kind == MarginalSpec::Kind::kExponential && !(marginal_b.rate > 0.0)) {
    throw std::domain_error("sample_gaussian_copula: rate must be positive");
  }
  const Matrix z = sample_bivariate_normal(stream, n, Vector2::Zero(), rho);
  Matrix out(n, 2);
  for (Index i = 0; i < n; ++i) {
    out(i, 0) = marginal_quantile(marginal_a, std_normal_cdf(z(i, 0)));
    out(i, 1) = marginal_quantile(marginal_b, std_normal_cdf(z(i, 1)));
  }
  return out;
}

std::pair<Matrix, Matrix> generate_scenario(const ScenarioSpec& spec) {
  if (spec.n < 2) {
    throw std::invalid_argument("generate_scenario: n must be >= 2");
  }
  SeedStream ref_stream = SeedStream(spec.seed).substream(kReferenceTag);
  SeedStream cmp_stream = SeedStream(spec.seed).substream(kComparisonTag);

  switch (spec.family) {
    case ScenarioFamily::kBvnMeanShift: {
      const double shift = spec.parameter;
      if (!(shift >= 0.0 && shift <= 9.0)) {
        throw std::invalid_argument("generate_scenario: mean shift must lie in [0, 9]");
      }
      Matrix ref = sample_bivariate_normal(ref_stream, spec.n, Vector2::Zero(), 0.5);
      Matrix cmp = sample_bivariate_normal(cmp_stream, spec.n,
                                           Vector2::Constant(shift), 0.5);
      return {std::move(ref), std::move(cmp)};
    }
    case ScenarioFamily::kBvnRhoSweep: {
      const double rho = spec.parameter;
      if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("generate_scenario: rho must lie in [0, 1]");
      }
      Matrix ref = sample_bivariate_normal(ref_stream, spec.n, Vector2::Zero(), 0.0);
      Matrix cmp = sample_bivariate_normal(cmp_stream, spec.n, Vector2::Zero(), rho);
      return {std::move(ref), std::move(cmp)};
    }
    case ScenarioFamily::kGaussCopulaSweep: {
      const double rho = spec.parameter;
      if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("generate_scenario: rho must lie in [0, 1]");
      }
      Matrix ref = sample_bivariate_normal(ref_stream, spec.n, Vector2::Zero(), 0.0);
      Matrix cmp = sample_gaussian_copula(cmp_stream, spec.n, rho,
                                          spec.marginal_a, spec.marginal_b);
      return {std::move(ref), std::move(cmp)};
    }
  }
  throw std::logic_error("generate_scenario: unknown family");
}

}  // namespace cet
