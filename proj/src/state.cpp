#include "grover/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "grover/errors.hpp"
#include "grover/kernels.hpp"
#include "grover/rng.hpp"

namespace grover {

QubitCount::QubitCount(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits) {
    throw ConfigError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n));
  }
}

StateVector::StateVector(QubitCount n) : n_(n), amps_(n.dimension()) {}

StateVector::StateVector(QubitCount n, std::vector<Amplitude> amps)
    : n_(n), amps_(std::move(amps)) {
  if (amps_.size() != n.dimension()) {
    throw DimensionError("amplitude array has length " + std::to_string(amps_.size()) +
                         ", expected 2^" + std::to_string(n.value()));
  }
}

void StateVector::check_index(BasisIndex i) const {
  if (i.value >= amps_.size()) {
    throw ConfigError("basis index " + std::to_string(i.value) + " out of range for " +
                      std::to_string(n_.value()) + " qubits");
  }
}

StateVector uniform_state(QubitCount n) {
  StateVector s(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n.dimension()));
  std::fill(s.amplitudes().begin(), s.amplitudes().end(), Amplitude{a, 0.0});
  return s;
}

StateVector basis_state(QubitCount n, BasisIndex i) {
  StateVector s(n);
  s.check_index(i);
  s[i.value] = 1.0;
  return s;
}

double norm(const StateVector& s) {
  return std::sqrt(kernels::active().norm_sq(s.amplitudes()));
}

ProbabilityDistribution probabilities(const StateVector& s) {
  ProbabilityDistribution d;
  d.probs.resize(s.size());
  kernels::active().abs_sq(s.amplitudes(), d.probs);
  return d;
}

std::vector<BasisIndex> measure_sample(const StateVector& s, std::uint64_t seed,
                                       std::size_t count) {
  std::vector<BasisIndex> out(count);
  if (count == 0) return out;

  const auto amps = s.amplitudes();
  std::size_t last = amps.size();
  while (last > 0 && std::norm(amps[last - 1]) == 0.0) --last;
  if (last == 0) return out;  // all-zero vector: nothing to draw from
  --last;

  // Scale draws by the actual total so accumulated rounding cannot push a
  // draw past the end of the distribution.
  const double total = kernels::active().norm_sq(amps);
  Rng rng(seed);
  std::vector<std::pair<double, std::size_t>> draws(count);
  for (std::size_t k = 0; k < count; ++k) draws[k] = {rng.uniform01() * total, k};
  std::sort(draws.begin(), draws.end());

  std::size_t i = 0;
  double cumulative = 0.0;
  for (const auto& [u, k] : draws) {
    while (i < last) {
      const double p = std::norm(amps[i]);
      if (p > 0.0 && cumulative + p >= u) break;
      cumulative += p;
      ++i;
    }
    out[k] = BasisIndex{i};
  }
  return out;
}

}  // namespace grover

namespace grover {

StateVector random_state(QubitCount n, std::uint64_t seed) {
  Rng rng(seed);
  auto gaussian = [&rng] {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u = 1.0 - rng.uniform01();
    const double v = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.141592653589793 * v);
  };
  StateVector s(n);
  for (Amplitude& a : s.amplitudes()) a = {gaussian(), gaussian()};
  kernels::active().scale(s.amplitudes(), 1.0 / norm(s));
  return s;
}

}  // namespace grover
