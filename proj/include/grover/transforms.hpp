#pragma once

#include <cstdint>
#include <functional>
#include <set>

#include "grover/state.hpp"

namespace grover {

/// Phase rotation e^{i*phi} applied to every basis state the predicate selects.
struct PhaseSpec {
  double phi = 0.0;
  std::function<bool(BasisIndex)> predicate;
};

/// Black-box condition C(S): phase-flips its marked states and counts how
/// many times it has been consulted. One flip of the whole register is one
/// query. Not safe for concurrent flips on the same instance.
class Oracle {
 public:
  /// Throws ConfigError if any marked index is >= 2^n.
  Oracle(QubitCount n, std::set<std::uint64_t> marked);

  static Oracle single(QubitCount n, BasisIndex marked) {
    return Oracle(n, {marked.value});
  }

  QubitCount qubits() const noexcept { return n_; }
  const std::set<std::uint64_t>& marked() const noexcept { return marked_; }
  bool is_marked(BasisIndex i) const { return marked_.contains(i.value); }
  std::uint64_t queries() const noexcept { return queries_; }

 private:
  friend void oracle_phase_flip(StateVector& s, Oracle& o);

  QubitCount n_;
  std::set<std::uint64_t> marked_;
  std::uint64_t queries_ = 0;
};

/// The single-bit transform M = (1/sqrt2)[[1, 1], [1, -1]] on `bit`.
/// Throws ConfigError when bit is not in [0, n).
void single_bit_m(StateVector& s, int bit);

/// W = M applied to every bit: in-place butterfly, n stages, each scaled by
/// 1/sqrt2 so every stage is itself unitary.
void walsh_hadamard(StateVector& s);

void selective_phase(StateVector& s, const PhaseSpec& spec);

/// Negates the marked amplitudes; counts one query. Throws DimensionError if
/// the oracle was built for another register width.
void oracle_phase_flip(StateVector& s, Oracle& o);

/// R: +1 on index 0, -1 everywhere else.
void zero_reflection(StateVector& s);

/// Inversion about average: amps[i] <- 2A - amps[i], A the mean amplitude.
/// The mean is taken in a full pass before any element is updated.
void diffusion_direct(StateVector& s);

/// D as W R W.
void diffusion_wrw(StateVector& s);

/// Mean amplitude (1/N) * sum(amps).
Amplitude average_amplitude(const StateVector& s);

}  // namespace grover
