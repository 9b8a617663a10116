#pragma once

#include "cet/copula.hpp"
#include "cet/two_sample.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace cet {

/// One evaluated grid cell: all four statistics for a (simulation, parameter,
/// seed) triple.
struct ExperimentRow {
  int sim = 0;
  double param = 0.0;
  double t_ce = 0.0;
  double t_mi = 0.0;
  double mmd2 = 0.0;
  double energy = 0.0;
  std::uint64_t seed = 0;
};

struct ExperimentTable {
  std::vector<ExperimentRow> rows;
};

/// The ten-point parameter grid of a simulation design:
/// sim 1: mean shifts {0, ..., 9}; sim 2: rho {0.0, ..., 0.9};
/// sim 3: rho {0.1, ..., 1.0}.
std::vector<double> simulation_parameters(int sim_id);

/// Evaluates all four statistics on every (seed, parameter) cell of the
/// chosen design at n = 500 per group. Rows sorted by (seed, parameter).
ExperimentTable run_simulation(int sim_id,
                               const std::vector<std::uint64_t>& seeds,
                               const EstimatorConfig& cfg,
                               const KernelConfig& kc);

/// CSV with header "sim,param,t_ce,t_mi,mmd2,energy,seed"; reals at 17
/// significant digits so write/read round-trips exactly.
void write_table(const ExperimentTable& table, const std::filesystem::path& path);
ExperimentTable read_table(const std::filesystem::path& path);

/// Standalone SVG: one polyline per statistic, median across seeds versus the
/// parameter. Byte-identical for identical tables.
void emit_plot(const ExperimentTable& table, int sim_id,
               const std::filesystem::path& path);

}  // namespace cet
