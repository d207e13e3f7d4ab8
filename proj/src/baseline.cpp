#include "grover/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "grover/errors.hpp"
#include "grover/rng.hpp"

namespace grover {
namespace {

// Partial Fisher-Yates: probe positions in a random order until the target
// turns up. Returns the number of probes.
std::uint64_t scan_trial(std::uint64_t entries, Rng& rng, std::vector<std::uint64_t>& order) {
  const std::uint64_t target = rng.below(entries);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  for (std::uint64_t q = 0; q < entries; ++q) {
    const std::uint64_t pick = q + rng.below(entries - q);
    std::swap(order[q], order[pick]);
    if (order[q] == target) return q + 1;
  }
  throw std::logic_error("random scan exhausted the database without finding the target");
}

}  // namespace

ClassicalSummary classical_scan(std::uint64_t entries, std::uint64_t seed, std::uint64_t trials) {
  if (trials == 0) throw ConfigError("classical baseline needs at least one trial");
  if (entries == 0) throw ConfigError("classical baseline needs a non-empty database");

  ClassicalSummary out;
  out.per_trial.resize(trials);
  std::vector<std::uint64_t> order(entries);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, t));
    out.per_trial[t] = scan_trial(entries, rng, order);
  }

  std::vector<std::uint64_t> sorted = out.per_trial;
  std::sort(sorted.begin(), sorted.end());
  const double total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
  out.mean_queries = total / static_cast<double>(trials);
  const std::size_t mid = trials / 2;
  out.median_queries = (trials % 2 == 1)
                           ? static_cast<double>(sorted[mid])
                           : 0.5 * static_cast<double>(sorted[mid - 1] + sorted[mid]);
  // Smallest q whose empirical CDF reaches one half: the ceil(trials/2)-th order statistic.
  out.queries_for_half_success = sorted[(trials + 1) / 2 - 1];
  return out;
}

ClassicalSummary classical_baseline(QubitCount n, std::uint64_t seed, std::uint64_t trials) {
  return classical_scan(n.dimension(), seed, trials);
}

}  // namespace grover
