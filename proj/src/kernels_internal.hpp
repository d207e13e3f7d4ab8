#pragma once

#include <cmath>

#include "grover/kernels.hpp"

namespace grover::kernels {

// Reductions add plainly inside fixed-size chunks and combine the chunk
// results with compensated summation. A plain running sum over 2^20 terms
// lets the diffusion average drift enough to cost ~1e-9 of norm over a
// full search.
inline constexpr std::size_t kReductionChunk = 256;

class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

#ifdef GROVER_HAVE_AVX2
const KernelTable& avx2_table();
#endif

}  // namespace grover::kernels
