#include <algorithm>

#include "kernels_internal.hpp"

namespace grover::kernels {
namespace {

void butterfly(std::span<Amplitude> amps, std::size_t stride, double scale) {
  const std::size_t n = amps.size();
  for (std::size_t block = 0; block < n; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      const Amplitude a = amps[i];
      const Amplitude b = amps[i + stride];
      amps[i] = {(a.real() + b.real()) * scale, (a.imag() + b.imag()) * scale};
      amps[i + stride] = {(a.real() - b.real()) * scale, (a.imag() - b.imag()) * scale};
    }
  }
}

Amplitude sum(std::span<const Amplitude> amps) {
  NeumaierSum re, im;
  for (std::size_t base = 0; base < amps.size(); base += kReductionChunk) {
    const std::size_t end = std::min(amps.size(), base + kReductionChunk);
    double cre = 0.0, cim = 0.0;
    for (std::size_t i = base; i < end; ++i) {
      cre += amps[i].real();
      cim += amps[i].imag();
    }
    re.add(cre);
    im.add(cim);
  }
  return {re.value(), im.value()};
}

double norm_sq(std::span<const Amplitude> amps) {
  NeumaierSum acc;
  for (std::size_t base = 0; base < amps.size(); base += kReductionChunk) {
    const std::size_t end = std::min(amps.size(), base + kReductionChunk);
    double chunk = 0.0;
    for (std::size_t i = base; i < end; ++i) {
      chunk += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    acc.add(chunk);
  }
  return acc.value();
}

void reflect(std::span<Amplitude> amps, Amplitude center2) {
  for (Amplitude& a : amps) a = {center2.real() - a.real(), center2.imag() - a.imag()};
}

void scale(std::span<Amplitude> amps, double factor) {
  for (Amplitude& a : amps) a = {a.real() * factor, a.imag() * factor};
}

void abs_sq(std::span<const Amplitude> amps, std::span<double> out) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out[i] = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::kScalar, butterfly, sum, norm_sq, reflect, scale, abs_sq};
  return table;
}

}  // namespace grover::kernels
