#pragma once

// Shared helpers for the unit tests: independent reference implementations
// written without the library's kernels, and small generators.

#include "kdwork/linalg.hpp"
#include "kdwork/random.hpp"
#include "kdwork/system.hpp"

#include <cmath>
#include <vector>

namespace kdtest {

using kdwork::CMatrix;
using kdwork::complex_t;

inline CMatrix naive_mul(const CMatrix &a, const CMatrix &b) {
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      complex_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

// Energy-basis KDQ from matrix elements only:
// q_if = U_fi * sum_m rho_im conj(U_fm).
inline CMatrix naive_kdq(const CMatrix &u, const CMatrix &rho) {
  const std::size_t d = u.rows();
  CMatrix q(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t f = 0; f < d; ++f) {
      complex_t s = 0;
      for (std::size_t m = 0; m < d; ++m) s += rho(i, m) * std::conj(u(f, m));
      q(i, f) = u(f, i) * s;
    }
  return q;
}

// Single-qubit 2x2 state in the storage basis (index 0 = down, 1 = up).
inline CMatrix qubit_rho(double p, complex_t gamma) {
  return CMatrix{{1.0 - p, std::conj(gamma)}, {gamma, p}};
}

inline CMatrix random_matrix(kdwork::Rng &rng, std::size_t r, std::size_t c) {
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.complex_normal();
  return m;
}

inline double energy(std::size_t k, int num_qubits, double e) {
  double s = 0.0;
  for (int q = 0; q < num_qubits; ++q) s += ((k >> q) & 1U) ? e : -e;
  return s;
}

} // namespace kdtest
