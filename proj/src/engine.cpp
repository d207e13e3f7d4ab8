#include "grover/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "grover/errors.hpp"
#include "grover/kernels.hpp"

namespace grover {
namespace {

constexpr double kImagTolerance = 1e-12;

struct Evolution {
  StateVector state;
  RunResult result;
};

Evolution evolve_and_record(const RunConfig& cfg, const StepObserver& observer) {
  cfg.validate();
  const std::uint64_t iterations = resolve_iterations(cfg.n, cfg.iterations);

  // Step (i): |0...0> through n butterfly stages.
  StateVector s = basis_state(cfg.n, BasisIndex{0});
  walsh_hadamard(s);

  Oracle oracle = Oracle::single(cfg.n, cfg.marked);
  RunResult result;
  result.config = cfg;

  auto record = [&](std::uint64_t j) {
    result.max_norm_drift = std::max(result.max_norm_drift, std::abs(norm(s) - 1.0));
    if (cfg.trace) result.trajectory.push_back(trajectory_point(j, s, cfg.marked));
    if (observer) observer(j, s);
  };

  if (cfg.trace) result.trajectory.reserve(iterations + 1);
  record(0);
  for (std::uint64_t j = 1; j <= iterations; ++j) {
    grover_iterate(s, oracle, cfg.diffusion);
    record(j);
  }

  result.iterations_executed = iterations;
  result.oracle_queries = oracle.queries();
  result.final_success_prob = std::norm(s[cfg.marked.value]);
  return {std::move(s), std::move(result)};
}

}  // namespace

void RunConfig::validate() const {
  if (marked.value >= n.dimension()) {
    throw ConfigError("marked index " + std::to_string(marked.value) + " out of range for " +
                      std::to_string(n.value()) + " qubits");
  }
  if (!iterations.is_auto() && iterations.count() > kMaxExplicitIterations) {
    throw ConfigError("explicit iteration count " + std::to_string(iterations.count()) +
                      " exceeds the limit of " + std::to_string(kMaxExplicitIterations));
  }
}

void grover_iterate(StateVector& s, Oracle& o, DiffusionPath path) {
  oracle_phase_flip(s, o);
  if (path == DiffusionPath::kWrw) {
    diffusion_wrw(s);
  } else {
    diffusion_direct(s);
  }
}

RunResult run(const RunConfig& cfg, const StepObserver& observer) {
  Evolution ev = evolve_and_record(cfg, observer);
  RunResult& result = ev.result;
  if (cfg.sample_count > 0) {
    result.samples = measure_sample(ev.state, cfg.seed, cfg.sample_count);
    const auto hits = std::count(result.samples.begin(), result.samples.end(), cfg.marked);
    result.sample_hit_fraction = static_cast<double>(hits) / static_cast<double>(cfg.sample_count);
  }
  return std::move(result);
}

StateVector evolve(const RunConfig& cfg) {
  RunConfig quiet = cfg;
  quiet.trace = false;
  return evolve_and_record(quiet, {}).state;
}

std::uint64_t auto_iteration_window(QubitCount n) {
  const double root = std::sqrt(static_cast<double>(n.dimension()));
  return static_cast<std::uint64_t>(std::ceil(std::numbers::pi / 4.0 * root)) + 1;
}

std::uint64_t resolve_iterations(QubitCount n, const IterationPlan& plan) {
  if (!plan.is_auto()) return plan.count();
  std::uint64_t best = 0;
  double best_p = analytic_success_prob(n, 0);
  const std::uint64_t window = auto_iteration_window(n);
  for (std::uint64_t j = 1; j <= window; ++j) {
    const double p = analytic_success_prob(n, j);
    if (p > best_p) {
      best_p = p;
      best = j;
    }
  }
  return best;
}

double analytic_amplitude(QubitCount n, std::uint64_t j) {
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n.dimension())));
  return std::sin((2.0 * static_cast<double>(j) + 1.0) * theta);
}

double analytic_success_prob(QubitCount n, std::uint64_t j) {
  const double a = analytic_amplitude(n, j);
  return a * a;
}

TrajectoryPoint trajectory_point(std::uint64_t j, const StateVector& s, BasisIndex marked) {
  s.check_index(marked);
  const Amplitude mk = s[marked.value];
  const Amplitude un = s[marked.value == 0 ? 1 : 0];
  if (std::abs(mk.imag()) > kImagTolerance) {
    throw std::logic_error("marked amplitude left the real axis at iteration " + std::to_string(j));
  }
  const double dim = static_cast<double>(s.size());
  const Amplitude flipped_sum = kernels::active().sum(s.amplitudes()) - 2.0 * mk;

  TrajectoryPoint p;
  p.j = j;
  p.marked_amp = mk.real();
  p.unmarked_amp = un.real();
  p.c_scale = un.real() * std::sqrt(dim);
  p.average_after_flip = flipped_sum.real() / dim;
  p.success_prob = p.marked_amp * p.marked_amp;
  return p;
}

}  // namespace grover
