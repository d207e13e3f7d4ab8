// AVX2 variants. A __m256d holds two complex amplitudes: [re0, im0, re1, im1].

#include <immintrin.h>

#include <algorithm>

#include "kernels_internal.hpp"

namespace grover::kernels {
namespace {

inline __m256d load2(const Amplitude* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Amplitude* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void butterfly(std::span<Amplitude> amps, std::size_t stride, double scale) {
  const std::size_t n = amps.size();
  Amplitude* x = amps.data();
  const __m256d vs = _mm256_set1_pd(scale);

  if (stride == 1) {
    // Both halves of the pair live in one register.
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
      const __m256d v = load2(x + i);                      // [a, b]
      const __m256d sw = _mm256_permute2f128_pd(v, v, 1);  // [b, a]
      const __m256d sum = _mm256_add_pd(v, sw);            // [a+b, ..]
      const __m256d diff = _mm256_sub_pd(sw, v);           // [.., a-b]
      store2(x + i, _mm256_mul_pd(_mm256_blend_pd(sum, diff, 0b1100), vs));
    }
    return;
  }

  for (std::size_t block = 0; block < n; block += 2 * stride) {
    Amplitude* lo = x + block;
    Amplitude* hi = lo + stride;
    for (std::size_t i = 0; i < stride; i += 2) {
      const __m256d a = load2(lo + i);
      const __m256d b = load2(hi + i);
      store2(lo + i, _mm256_mul_pd(_mm256_add_pd(a, b), vs));
      store2(hi + i, _mm256_mul_pd(_mm256_sub_pd(a, b), vs));
    }
  }
}

// Sum of x[begin, end) with end - begin even.
__m256d sum_block(const Amplitude* x, std::size_t begin, std::size_t end) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    acc0 = _mm256_add_pd(acc0, load2(x + i));
    acc1 = _mm256_add_pd(acc1, load2(x + i + 2));
  }
  for (; i + 2 <= end; i += 2) acc0 = _mm256_add_pd(acc0, load2(x + i));
  return _mm256_add_pd(acc0, acc1);
}

__m256d norm_block(const Amplitude* x, std::size_t begin, std::size_t end) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    const __m256d v0 = load2(x + i);
    const __m256d v1 = load2(x + i + 2);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(v0, v0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(v1, v1));
  }
  for (; i + 2 <= end; i += 2) {
    const __m256d v = load2(x + i);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(v, v));
  }
  return _mm256_add_pd(acc0, acc1);
}

Amplitude sum(std::span<const Amplitude> amps) {
  const std::size_t n = amps.size();
  const std::size_t even = n & ~std::size_t{1};
  const Amplitude* x = amps.data();
  NeumaierSum re, im;
  for (std::size_t base = 0; base < even; base += kReductionChunk) {
    const __m256d acc = sum_block(x, base, std::min(even, base + kReductionChunk));
    const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    re.add(_mm_cvtsd_f64(s));
    im.add(_mm_cvtsd_f64(_mm_unpackhi_pd(s, s)));
  }
  if (even < n) {
    re.add(x[even].real());
    im.add(x[even].imag());
  }
  return {re.value(), im.value()};
}

double norm_sq(std::span<const Amplitude> amps) {
  const std::size_t n = amps.size();
  const std::size_t even = n & ~std::size_t{1};
  const Amplitude* x = amps.data();
  NeumaierSum acc;
  for (std::size_t base = 0; base < even; base += kReductionChunk) {
    acc.add(hsum(norm_block(x, base, std::min(even, base + kReductionChunk))));
  }
  if (even < n) acc.add(x[even].real() * x[even].real() + x[even].imag() * x[even].imag());
  return acc.value();
}

void reflect(std::span<Amplitude> amps, Amplitude center2) {
  const std::size_t n = amps.size();
  Amplitude* x = amps.data();
  const __m256d c = _mm256_setr_pd(center2.real(), center2.imag(), center2.real(), center2.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(x + i, _mm256_sub_pd(c, load2(x + i)));
  for (; i < n; ++i) x[i] = {center2.real() - x[i].real(), center2.imag() - x[i].imag()};
}

void scale(std::span<Amplitude> amps, double factor) {
  const std::size_t n = amps.size();
  Amplitude* x = amps.data();
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(x + i, _mm256_mul_pd(load2(x + i), f));
  for (; i < n; ++i) x[i] = {x[i].real() * factor, x[i].imag() * factor};
}

void abs_sq(std::span<const Amplitude> amps, std::span<double> out) {
  const std::size_t n = amps.size();
  const Amplitude* x = amps.data();
  double* y = out.data();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = load2(x + i);
    const __m256d v1 = load2(x + i + 2);
    // hadd interleaves: [|x0|^2, |x2|^2, |x1|^2, |x3|^2]
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    _mm256_storeu_pd(y + i, _mm256_permute4x64_pd(h, 0b11011000));
  }
  for (; i < n; ++i) y[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::kAvx2, butterfly, sum, norm_sq, reflect, scale, abs_sq};
  return table;
}

}  // namespace grover::kernels
