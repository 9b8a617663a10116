#pragma once

#include "cet/rng.hpp"
#include "cet/types.hpp"

#include <cstdint>
#include <utility>

namespace cet {

struct MarginalSpec {
  enum class Kind { kStandardNormal, kExponential } kind = Kind::kStandardNormal;
  double rate = 1.0;  // exponential only
};

enum class ScenarioFamily {
  kBvnMeanShift,     // reference N(0, rho=0.5) vs comparison N((i,i), rho=0.5)
  kBvnRhoSweep,      // reference N(0, rho=0) vs comparison N(0, rho=parameter)
  kGaussCopulaSweep, // reference N(0, rho=0) vs Gaussian-copula comparison
};

struct ScenarioSpec {
  ScenarioFamily family = ScenarioFamily::kBvnMeanShift;
  Index n = 500;
  double parameter = 0.0;  // mean shift i, or rho
  MarginalSpec marginal_a{MarginalSpec::Kind::kStandardNormal, 1.0};
  MarginalSpec marginal_b{MarginalSpec::Kind::kExponential, 0.5};
  std::uint64_t seed = 0;
};

/// n i.i.d. standard normals via the inverse-CDF transform of the stream's
/// uniforms; deterministic given the stream state.
Vector sample_std_normal(SeedStream& stream, Index n);

/// Rows are mean + L z with L = cholesky2(rho) and z i.i.d. standard normal.
Matrix sample_bivariate_normal(SeedStream& stream, Index n, const Vector2& mean,
                               double rho);

/// Gaussian-copula pairs: latent bivariate normal z, u = Phi(z) per
/// coordinate, then each marginal quantile applied to its u column.
Matrix sample_gaussian_copula(SeedStream& stream, Index n, double rho,
                              const MarginalSpec& marginal_a,
                              const MarginalSpec& marginal_b);

/// Reference/comparison pair for one simulation scenario. The two samples use
/// independent sub-streams of the spec's seed.
std::pair<Matrix, Matrix> generate_scenario(const ScenarioSpec& spec);

}  // namespace cet
