#pragma once

#include <vector>

#include "grover/state.hpp"

namespace grover::dense {

inline constexpr int kMaxDenseQubits = 10;

/// Explicit N x N operator, row-major, N = 2^n with n <= 10. Reference path
/// only: every product here is O(N^2) or O(N^3).
class DenseOperator {
 public:
  /// Zero matrix. Throws ConfigError for n > kMaxDenseQubits.
  explicit DenseOperator(QubitCount n);

  QubitCount qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }

  Amplitude& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Amplitude& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator*=(double factor);

 private:
  QubitCount n_;
  std::size_t dim_;
  std::vector<Amplitude> entries_;
};

DenseOperator operator+(DenseOperator a, const DenseOperator& b);
DenseOperator operator*(double factor, DenseOperator a);

DenseOperator identity(QubitCount n);

/// W_ij = 2^{-n/2} (-1)^{popcount(i & j)}.
DenseOperator build_w(QubitCount n);

/// diag(1, -1, ..., -1).
DenseOperator build_r(QubitCount n);

/// -I; the part of R that is the same on every diagonal entry.
DenseOperator build_r1(QubitCount n);

/// Single nonzero entry (0, 0) = 2, so that R = R1 + R2.
DenseOperator build_r2(QubitCount n);

/// P_ij = 1/N.
DenseOperator build_p(QubitCount n);

/// D_ii = -1 + 2/N, D_ij = 2/N, built entry by entry.
DenseOperator build_d(QubitCount n);

/// Throws DimensionError on mismatched sizes.
DenseOperator mat_mul(const DenseOperator& a, const DenseOperator& b);

StateVector mat_vec(const DenseOperator& a, const StateVector& s);

DenseOperator conjugate_transpose(const DenseOperator& a);

/// Largest |a_ij - b_ij|. Throws DimensionError on mismatched sizes.
double max_deviation(const DenseOperator& a, const DenseOperator& b);

/// max |(A A^dagger - I)_ij| <= tol.
bool is_unitary(const DenseOperator& a, double tol);

}  // namespace grover::dense
