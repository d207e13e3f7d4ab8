#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "grover/state.hpp"
#include "grover/transforms.hpp"

namespace grover {

inline constexpr std::uint64_t kMaxExplicitIterations = std::uint64_t{1} << 20;

enum class DiffusionPath { kDirect, kWrw };

/// Either an explicit repetition count or AUTO (argmax of the closed-form
/// success probability).
class IterationPlan {
 public:
  static IterationPlan automatic() { return IterationPlan{}; }
  static IterationPlan exactly(std::uint64_t count) { return IterationPlan{count}; }

  bool is_auto() const noexcept { return !count_.has_value(); }
  std::uint64_t count() const { return count_.value(); }

  friend bool operator==(const IterationPlan&, const IterationPlan&) = default;

 private:
  IterationPlan() = default;
  explicit IterationPlan(std::uint64_t count) : count_(count) {}

  std::optional<std::uint64_t> count_;
};

struct RunConfig {
  QubitCount n{2};
  BasisIndex marked{};
  IterationPlan iterations = IterationPlan::automatic();
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;
  bool trace = false;
  DiffusionPath diffusion = DiffusionPath::kDirect;

  /// Throws ConfigError on marked >= 2^n or an explicit count above the guard.
  void validate() const;
};

struct TrajectoryPoint {
  std::uint64_t j = 0;
  double marked_amp = 0.0;
  /// Shared amplitude of every unmarked state.
  double unmarked_amp = 0.0;
  /// unmarked_amp * sqrt(N).
  double c_scale = 0.0;
  /// Mean amplitude of this state after the marked phase flip, i.e. the
  /// centre the next diffusion inverts about.
  double average_after_flip = 0.0;
  double success_prob = 0.0;
};

struct RunResult {
  RunConfig config;
  std::vector<TrajectoryPoint> trajectory;
  double final_success_prob = 0.0;
  std::uint64_t iterations_executed = 0;
  std::uint64_t oracle_queries = 0;
  std::vector<BasisIndex> samples;
  double sample_hit_fraction = 0.0;
  /// max |norm - 1| over the initial state and every iteration.
  double max_norm_drift = 0.0;
};

/// Called with (j, state) for j = 0 (uniform start) and after every iteration.
using StepObserver = std::function<void(std::uint64_t, const StateVector&)>;

/// One oracle flip followed by one diffusion.
void grover_iterate(StateVector& s, Oracle& o, DiffusionPath path = DiffusionPath::kDirect);

RunResult run(const RunConfig& cfg, const StepObserver& observer = {});

/// The final state of a run, without sampling or tracing.
StateVector evolve(const RunConfig& cfg);

std::uint64_t resolve_iterations(QubitCount n, const IterationPlan& plan);

/// Upper end of the AUTO search window: ceil((pi/4) sqrt(N)) + 1.
std::uint64_t auto_iteration_window(QubitCount n);

/// sin((2j + 1) theta), theta = asin(1/sqrt(N)).
double analytic_amplitude(QubitCount n, std::uint64_t j);
double analytic_success_prob(QubitCount n, std::uint64_t j);

/// Extracts the trajectory record of a single-marked state. Throws
/// std::logic_error if the marked amplitude has a non-negligible imaginary
/// part (the trajectory of a real start stays real).
TrajectoryPoint trajectory_point(std::uint64_t j, const StateVector& s, BasisIndex marked);

}  // namespace grover
