#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace grover {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 26;
inline constexpr double kNormTolerance = 1e-9;

/// Number of bits in the register, 1 <= n <= 26. The memory cap is 2^26
/// amplitudes (1 GiB of complex doubles).
class QubitCount {
 public:
  /// Throws ConfigError when n is outside [1, kMaxQubits].
  explicit QubitCount(int n);

  int value() const noexcept { return n_; }
  std::uint64_t dimension() const noexcept { return std::uint64_t{1} << n_; }

  friend bool operator==(QubitCount, QubitCount) = default;

 private:
  int n_;
};

/// Basis-state label. Bit k of the integer is qubit k (bit 0 least significant).
struct BasisIndex {
  std::uint64_t value = 0;

  friend auto operator<=>(BasisIndex, BasisIndex) = default;
};

class StateVector {
 public:
  /// Allocates 2^n zero amplitudes. Not normalized; callers fill it in.
  explicit StateVector(QubitCount n);

  /// Takes ownership of explicit amplitudes; length must be exactly 2^n.
  StateVector(QubitCount n, std::vector<Amplitude> amps);

  QubitCount qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return amps_.size(); }

  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

  Amplitude& operator[](std::size_t i) { return amps_[i]; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  /// Throws ConfigError if i >= 2^n.
  void check_index(BasisIndex i) const;

 private:
  QubitCount n_;
  std::vector<Amplitude> amps_;
};

struct ProbabilityDistribution {
  std::vector<double> probs;
};

/// Equal amplitude 1/sqrt(N) in every basis state.
StateVector uniform_state(QubitCount n);

StateVector basis_state(QubitCount n, BasisIndex i);

double norm(const StateVector& s);

ProbabilityDistribution probabilities(const StateVector& s);

/// Draws `count` independent basis indices from |amp|^2. Inverse-CDF with a
/// single cumulative sweep per batch; a draw landing exactly on a cumulative
/// boundary resolves to the lower index. Pure in (state, seed, count).
std::vector<BasisIndex> measure_sample(const StateVector& s, std::uint64_t seed,
                                       std::size_t count);

}  // namespace grover

namespace grover {

/// Normalized state with independent Gaussian real and imaginary parts,
/// reproducible from the seed. Used by verification and tests.
StateVector random_state(QubitCount n, std::uint64_t seed);

}  // namespace grover
