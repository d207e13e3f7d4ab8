#pragma once

// Data-parallel inner loops over complex<double> amplitude arrays.
//
// Every kernel has a portable scalar reference implementation. SIMD variants
// are compiled into separate translation units with their own target flags
// and picked at runtime from the CPU's feature set. Element-wise kernels are
// bitwise identical across variants; reductions may differ only by summation
// order.

#include <complex>
#include <cstddef>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace grover::kernels {

using Amplitude = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

inline std::ostream& operator<<(std::ostream& os, Isa isa) { return os << isa_name(isa); }

struct KernelTable {
  Isa isa;

  /// One butterfly stage on the pairs (i, i + stride) where i has the
  /// stride bit clear: (a, b) -> ((a + b) * scale, (a - b) * scale).
  /// stride is a power of two smaller than amps.size().
  void (*butterfly)(std::span<Amplitude> amps, std::size_t stride, double scale);

  /// Sum of all amplitudes.
  Amplitude (*sum)(std::span<const Amplitude> amps);

  /// Sum of |amp|^2.
  double (*norm_sq)(std::span<const Amplitude> amps);

  /// amps[i] <- center2 - amps[i]   (reflection through center2 / 2).
  void (*reflect)(std::span<Amplitude> amps, Amplitude center2);

  /// amps[i] <- amps[i] * factor for a real factor.
  void (*scale)(std::span<Amplitude> amps, double factor);

  /// out[i] <- re^2 + im^2. out.size() == amps.size().
  void (*abs_sq)(std::span<const Amplitude> amps, std::span<double> out);
};

const KernelTable& scalar_table();

/// Variants this binary was built with AND the running CPU supports,
/// scalar first.
std::vector<Isa> available_isas();

/// Table for a specific variant. Throws std::invalid_argument if it is not
/// in available_isas().
const KernelTable& table_for(Isa isa);

/// Table used by the transforms. Defaults to the widest available variant;
/// the GROVER_KERNELS environment variable ("scalar" / "avx2") overrides it
/// at first use.
const KernelTable& active();

/// Overrides the active variant for the rest of the process (tests, benches).
void set_active(Isa isa);

}  // namespace grover::kernels
