#include "grover/transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "grover/errors.hpp"
#include "grover/kernels.hpp"

namespace grover {

Oracle::Oracle(QubitCount n, std::set<std::uint64_t> marked) : n_(n), marked_(std::move(marked)) {
  for (std::uint64_t m : marked_) {
    if (m >= n.dimension()) {
      throw ConfigError("marked index " + std::to_string(m) + " out of range for " +
                        std::to_string(n.value()) + " qubits");
    }
  }
}

void single_bit_m(StateVector& s, int bit) {
  if (bit < 0 || bit >= s.qubits().value()) {
    throw ConfigError("bit " + std::to_string(bit) + " out of range for " +
                      std::to_string(s.qubits().value()) + " qubits");
  }
  kernels::active().butterfly(s.amplitudes(), std::size_t{1} << bit, std::numbers::sqrt2 / 2.0);
}

void walsh_hadamard(StateVector& s) {
  const auto& k = kernels::active();
  const double r = std::numbers::sqrt2 / 2.0;
  for (int bit = 0; bit < s.qubits().value(); ++bit) {
    k.butterfly(s.amplitudes(), std::size_t{1} << bit, r);
  }
}

void selective_phase(StateVector& s, const PhaseSpec& spec) {
  if (!spec.predicate) return;
  const Amplitude rot = std::polar(1.0, spec.phi);
  auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (spec.predicate(BasisIndex{i})) amps[i] *= rot;
  }
}

void oracle_phase_flip(StateVector& s, Oracle& o) {
  if (o.qubits() != s.qubits()) {
    throw DimensionError("oracle built for " + std::to_string(o.qubits().value()) +
                         " qubits applied to a " + std::to_string(s.qubits().value()) +
                         "-qubit state");
  }
  for (std::uint64_t m : o.marked_) s[m] = -s[m];
  ++o.queries_;
}

void zero_reflection(StateVector& s) {
  const Amplitude keep = s[0];
  kernels::active().scale(s.amplitudes(), -1.0);
  s[0] = keep;
}

Amplitude average_amplitude(const StateVector& s) {
  return kernels::active().sum(s.amplitudes()) / static_cast<double>(s.size());
}

void diffusion_direct(StateVector& s) {
  const Amplitude avg = average_amplitude(s);
  kernels::active().reflect(s.amplitudes(), 2.0 * avg);
}

void diffusion_wrw(StateVector& s) {
  walsh_hadamard(s);
  zero_reflection(s);
  walsh_hadamard(s);
}

}  // namespace grover
