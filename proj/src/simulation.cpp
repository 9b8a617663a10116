#include "cet/simulation.hpp"

#include "cet/rng.hpp"
#include "cet/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cet {

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_svg(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

double median(std::vector<double> v) {
  const size_t n = v.size();
  std::sort(v.begin(), v.end());
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ScenarioFamily family_of(int sim_id) {
  switch (sim_id) {
    case 1: return ScenarioFamily::kBvnMeanShift;
    case 2: return ScenarioFamily::kBvnRhoSweep;
    case 3: return ScenarioFamily::kGaussCopulaSweep;
  }
  throw std::invalid_argument("simulation id must be 1, 2, or 3");
}

}  // namespace

std::vector<double> simulation_parameters(int sim_id) {
  std::vector<double> params;
  params.reserve(10);
  switch (sim_id) {
    case 1:
      for (int i = 0; i <= 9; ++i) params.push_back(static_cast<double>(i));
      break;
    case 2:
      for (int i = 0; i <= 9; ++i) params.push_back(0.1 * i);
      break;
    case 3:
      for (int i = 1; i <= 10; ++i) params.push_back(0.1 * i);
      break;
    default:
      throw std::invalid_argument("simulation id must be 1, 2, or 3");
  }
  return params;
}

ExperimentTable run_simulation(int sim_id,
                               const std::vector<std::uint64_t>& seeds,
                               const EstimatorConfig& cfg,
                               const KernelConfig& kc) {
  if (seeds.empty()) {
    throw std::invalid_argument("run_simulation: seeds must be non-empty");
  }
  const auto params = simulation_parameters(sim_id);
  const ScenarioFamily family = family_of(sim_id);

  ExperimentTable table;
  table.rows.reserve(seeds.size() * params.size());
  for (std::uint64_t seed : seeds) {
    for (double param : params) {
      ScenarioSpec spec;
      spec.family = family;
      spec.parameter = param;
      spec.seed = seed;
      const auto [ref, cmp] = generate_scenario(spec);

      EstimatorConfig cell_cfg = cfg;
      cell_cfg.seed = mix_seed(cfg.seed, seed);

      ExperimentRow row;
      row.sim = sim_id;
      row.param = param;
      row.seed = seed;
      row.t_ce = tce_statistic(ref, cmp, cell_cfg);
      row.t_mi = tmi_statistic(ref, cmp, cell_cfg);
      row.mmd2 = mmd2_statistic(ref, cmp, kc);
      row.energy = energy_statistic(ref, cmp);
      table.rows.push_back(row);
    }
  }
  return table;
}

namespace {
constexpr const char* kCsvHeader = "sim,param,t_ce,t_mi,mmd2,energy,seed";
}

void write_table(const ExperimentTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_table: cannot open " + path.string());
  }
  out << kCsvHeader << '\n';
  for (const auto& r : table.rows) {
    out << r.sim << ',' << format_real(r.param) << ',' << format_real(r.t_ce)
        << ',' << format_real(r.t_mi) << ',' << format_real(r.mmd2) << ','
        << format_real(r.energy) << ',' << r.seed << '\n';
  }
  if (!out) {
    throw std::runtime_error("write_table: write failed for " + path.string());
  }
}

ExperimentTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_table: cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("read_table: malformed header in " + path.string());
  }
  ExperimentTable table;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 7) {
      throw std::runtime_error("read_table: row " + std::to_string(line_no) +
                               " has " + std::to_string(fields.size()) +
                               " fields, expected 7");
    }
    ExperimentRow r;
    try {
      size_t pos = 0;
      r.sim = std::stoi(fields[0], &pos);
      if (pos != fields[0].size()) throw std::invalid_argument(fields[0]);
      auto parse_real = [&](int col) {
        size_t p = 0;
        const double v = std::stod(fields[static_cast<size_t>(col)], &p);
        if (p != fields[static_cast<size_t>(col)].size()) {
          throw std::invalid_argument(fields[static_cast<size_t>(col)]);
        }
        return v;
      };
      r.param = parse_real(1);
      r.t_ce = parse_real(2);
      r.t_mi = parse_real(3);
      r.mmd2 = parse_real(4);
      r.energy = parse_real(5);
      r.seed = std::stoull(fields[6], &pos);
      if (pos != fields[6].size()) throw std::invalid_argument(fields[6]);
    } catch (const std::exception&) {
      throw std::runtime_error("read_table: non-numeric cell at row " +
                               std::to_string(line_no));
    }
    table.rows.push_back(r);
  }
  return table;
}

void emit_plot(const ExperimentTable& table, int sim_id,
               const std::filesystem::path& path) {
  // Median across seeds per parameter, one series per statistic.
  std::map<double, std::vector<double>> by_param[4];
  for (const auto& r : table.rows) {
    if (r.sim != sim_id) continue;
    by_param[0][r.param].push_back(r.t_ce);
    by_param[1][r.param].push_back(r.t_mi);
    by_param[2][r.param].push_back(r.mmd2);
    by_param[3][r.param].push_back(r.energy);
  }
  if (by_param[0].empty()) {
    throw std::invalid_argument("emit_plot: table has no rows for simulation " +
                                std::to_string(sim_id));
  }

  std::vector<double> params;
  for (const auto& [p, _] : by_param[0]) params.push_back(p);
  std::vector<std::vector<double>> series(4);
  for (int s = 0; s < 4; ++s) {
    for (double p : params) series[static_cast<size_t>(s)].push_back(median(by_param[s][p]));
  }

  double ymin = series[0][0], ymax = series[0][0];
  for (const auto& sv : series) {
    for (double v : sv) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (ymax == ymin) ymax = ymin + 1.0;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;
  const double xmin = params.front();
  const double xmax = params.back() == params.front() ? params.front() + 1.0
                                                      : params.back();

  const double width = 640.0, height = 480.0;
  const double ml = 70.0, mr = 130.0, mt = 30.0, mb = 55.0;
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

  static const char* kNames[4] = {"t_ce", "t_mi", "mmd2", "energy"};
  static const char* kColors[4] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};
  const std::string xlabel = sim_id == 1 ? "mean shift" : "rho";

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << " " << height << "\">\n"
      << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n"
      << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Axis ticks: parameters on x, five even ticks on y.
  for (double p : params) {
    const double x = px(p);
    svg << "<line x1=\"" << format_svg(x) << "\" y1=\"" << format_svg(mt + ph)
        << "\" x2=\"" << format_svg(x) << "\" y2=\"" << format_svg(mt + ph + 5)
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << format_svg(x) << "\" y=\"" << format_svg(mt + ph + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_svg(p)
        << "</text>\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const double y = ymin + (ymax - ymin) * t / 4.0;
    svg << "<line x1=\"" << format_svg(ml - 5) << "\" y1=\"" << format_svg(py(y))
        << "\" x2=\"" << format_svg(ml) << "\" y2=\"" << format_svg(py(y))
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << format_svg(ml - 8) << "\" y=\"" << format_svg(py(y) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << format_svg(y)
        << "</text>\n";
  }
  svg << "<text x=\"" << format_svg(ml + pw / 2) << "\" y=\""
      << format_svg(height - 12) << "\" font-size=\"13\" text-anchor=\"middle\">"
      << xlabel << "</text>\n"
      << "<text x=\"18\" y=\"" << format_svg(mt + ph / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << format_svg(mt + ph / 2) << ")\">statistic</text>\n";

  for (int s = 0; s < 4; ++s) {
    svg << "<polyline fill=\"none\" stroke=\"" << kColors[s]
        << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < params.size(); ++i) {
      if (i) svg << ' ';
      svg << format_svg(px(params[i])) << ','
          << format_svg(py(series[static_cast<size_t>(s)][i]));
    }
    svg << "\"/>\n";
    const double ly = mt + 16.0 + 18.0 * s;
    svg << "<line x1=\"" << format_svg(ml + pw + 10) << "\" y1=\"" << format_svg(ly)
        << "\" x2=\"" << format_svg(ml + pw + 34) << "\" y2=\"" << format_svg(ly)
        << "\" stroke=\"" << kColors[s] << "\" stroke-width=\"1.5\"/>\n"
        << "<text x=\"" << format_svg(ml + pw + 40) << "\" y=\""
        << format_svg(ly + 4) << "\" font-size=\"12\">" << kNames[s]
        << "</text>\n";
  }
  svg << "</svg>\n";

  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("emit_plot: cannot open " + path.string());
  }
  out << svg.str();
  if (!out) {
    throw std::runtime_error("emit_plot: write failed for " + path.string());
  }
}

}  // namespace cet
