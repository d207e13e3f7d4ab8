#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "grover/cli.hpp"

namespace grover::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(const std::vector<TrajectoryPoint>& rows, std::ostream& out) {
  out << kTrajectoryHeader << '\n';
  for (const TrajectoryPoint& p : rows) {
    out << p.j << ',' << format_double(p.marked_amp) << ',' << format_double(p.unmarked_amp) << ','
        << format_double(p.c_scale) << ',' << format_double(p.average_after_flip) << ','
        << format_double(p.success_prob) << '\n';
  }
}

std::string run_result_json(const RunResult& result) {
  using nlohmann::ordered_json;
  const RunConfig& cfg = result.config;

  ordered_json config;
  config["qubits"] = cfg.n.value();
  config["dimension"] = cfg.n.dimension();
  config["marked"] = cfg.marked.value;
  if (cfg.iterations.is_auto()) {
    config["iterations"] = "auto";
  } else {
    config["iterations"] = cfg.iterations.count();
  }
  config["seed"] = cfg.seed;
  config["samples"] = cfg.sample_count;
  config["trace"] = cfg.trace;
  config["diffusion"] = cfg.diffusion == DiffusionPath::kWrw ? "wrw" : "direct";

  ordered_json j;
  j["config"] = std::move(config);
  j["iterations_executed"] = result.iterations_executed;
  j["oracle_queries"] = result.oracle_queries;
  j["final_success_prob"] = result.final_success_prob;
  j["max_norm_drift"] = result.max_norm_drift;
  j["sample_hit_fraction"] = result.sample_hit_fraction;
  auto samples = ordered_json::array();
  for (BasisIndex s : result.samples) samples.push_back(s.value);
  j["samples"] = std::move(samples);
  if (cfg.trace) {
    auto traj = ordered_json::array();
    for (const TrajectoryPoint& p : result.trajectory) {
      traj.push_back(ordered_json{{"j", p.j},
                                  {"marked_amp", p.marked_amp},
                                  {"unmarked_amp", p.unmarked_amp},
                                  {"c_scale", p.c_scale},
                                  {"average_after_flip", p.average_after_flip},
                                  {"success_prob", p.success_prob}});
    }
    j["trajectory"] = std::move(traj);
  }
  return j.dump(2) + "\n";
}

}  // namespace grover::cli
