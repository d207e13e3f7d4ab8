#pragma once

#include <cstdint>
#include <vector>

#include "grover/state.hpp"

namespace grover {

struct ClassicalSummary {
  double mean_queries = 0.0;
  double median_queries = 0.0;
  /// Smallest q with empirical P(found within q queries) >= 0.5.
  std::uint64_t queries_for_half_success = 0;
  std::vector<std::uint64_t> per_trial;
};

/// Random-order scan without repetition over N = 2^n entries with a uniformly
/// random target. Trial t uses the stream mix_seed(seed, t), so trials are
/// independent of evaluation order.
ClassicalSummary classical_baseline(QubitCount n, std::uint64_t seed, std::uint64_t trials);

/// Same, for an arbitrary database size (not necessarily a power of two).
ClassicalSummary classical_scan(std::uint64_t entries, std::uint64_t seed, std::uint64_t trials);

}  // namespace grover
