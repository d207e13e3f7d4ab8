#include "grover/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "grover/errors.hpp"

namespace grover::dense {
namespace {

void require_same_dim(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("operator dimensions differ: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

DenseOperator::DenseOperator(QubitCount n) : n_(n), dim_(n.dimension()) {
  if (n.value() > kMaxDenseQubits) {
    throw ConfigError("dense operators are limited to " + std::to_string(kMaxDenseQubits) +
                      " qubits, got " + std::to_string(n.value()));
  }
  entries_.assign(dim_ * dim_, Amplitude{});
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

DenseOperator& DenseOperator::operator*=(double factor) {
  for (Amplitude& e : entries_) e *= factor;
  return *this;
}

DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
DenseOperator operator*(double factor, DenseOperator a) { return a *= factor; }

DenseOperator identity(QubitCount n) {
  DenseOperator id(n);
  for (std::size_t i = 0; i < id.dim(); ++i) id(i, i) = 1.0;
  return id;
}

DenseOperator build_w(QubitCount n) {
  DenseOperator w(n);
  const double norm = std::pow(2.0, -0.5 * n.value());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) {
      w(i, j) = (std::popcount(i & j) % 2 == 0) ? norm : -norm;
    }
  }
  return w;
}

DenseOperator build_r(QubitCount n) {
  DenseOperator r(n);
  r(0, 0) = 1.0;
  for (std::size_t i = 1; i < r.dim(); ++i) r(i, i) = -1.0;
  return r;
}

DenseOperator build_r1(QubitCount n) { return -1.0 * identity(n); }

DenseOperator build_r2(QubitCount n) {
  DenseOperator r2(n);
  r2(0, 0) = 2.0;
  return r2;
}

DenseOperator build_p(QubitCount n) {
  DenseOperator p(n);
  const double inv = 1.0 / static_cast<double>(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t j = 0; j < p.dim(); ++j) p(i, j) = inv;
  }
  return p;
}

DenseOperator build_d(QubitCount n) {
  DenseOperator d(n);
  const double off = 2.0 / static_cast<double>(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) {
    for (std::size_t j = 0; j < d.dim(); ++j) d(i, j) = (i == j) ? -1.0 + off : off;
  }
  return d;
}

DenseOperator mat_mul(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a, b);
  DenseOperator c(a.qubits());
  const std::size_t dim = a.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Amplitude aik = a(i, k);
      if (aik == Amplitude{}) continue;
      for (std::size_t j = 0; j < dim; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

StateVector mat_vec(const DenseOperator& a, const StateVector& s) {
  if (a.dim() != s.size()) {
    throw DimensionError("operator of dimension " + std::to_string(a.dim()) +
                         " applied to a state of length " + std::to_string(s.size()));
  }
  StateVector out(s.qubits());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Amplitude acc{};
    for (std::size_t j = 0; j < a.dim(); ++j) acc += a(i, j) * s[j];
    out[i] = acc;
  }
  return out;
}

DenseOperator conjugate_transpose(const DenseOperator& a) {
  DenseOperator t(a.qubits());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = std::conj(a(i, j));
  }
  return t;
}

double max_deviation(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

bool is_unitary(const DenseOperator& a, double tol) {
  return max_deviation(mat_mul(a, conjugate_transpose(a)), identity(a.qubits())) <= tol;
}

}  // namespace grover::dense
