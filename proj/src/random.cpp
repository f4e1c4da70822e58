#include "kdwork/random.hpp"

#include <cmath>
#include <numbers>

namespace kdwork {

CMatrix random_unitary(Rng &rng, std::size_t d) {
  // Gram-Schmidt of a Ginibre matrix is its QR factorization with positive diag(R).
  std::vector<std::vector<complex_t>> cols(d, std::vector<complex_t>(d));
  for (auto &c : cols)
    for (auto &z : c) z = rng.complex_normal();
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      complex_t dot{};
      for (std::size_t r = 0; r < d; ++r) dot += std::conj(cols[j][r]) * cols[k][r];
      for (std::size_t r = 0; r < d; ++r) cols[k][r] -= dot * cols[j][r];
    }
    double norm = 0.0;
    for (const auto &z : cols[k]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto &z : cols[k]) z /= norm;
  }
  CMatrix u(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) u(r, c) = cols[c][r];
  return u;
}

DensityMatrix random_pure_state(Rng &rng, std::size_t d) {
  std::vector<complex_t> ket(d);
  for (auto &z : ket) z = rng.complex_normal();
  return pure_state(ket);
}

DensityMatrix random_mixed_state(Rng &rng, std::size_t d) {
  CMatrix g(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) g(r, c) = rng.complex_normal();
  CMatrix m = mat_mul(g, adjoint(g));
  const double tr = trace(m).real();
  m *= 1.0 / tr;
  for (std::size_t r = 0; r < d; ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) m(c, r) = std::conj(m(r, c));
  }
  // Put the trace rounding error on the first diagonal entry.
  m(0, 0) += 1.0 - trace(m).real();
  return DensityMatrix(std::move(m));
}

DensityMatrix random_state(Rng &rng, std::size_t d) {
  return rng.integer(0, 2) == 0 ? random_pure_state(rng, d) : random_mixed_state(rng, d);
}

QubitStateParams random_qubit_params(Rng &rng) {
  QubitStateParams p;
  p.p = rng.uniform();
  p.gamma_abs = rng.uniform() * std::sqrt(p.p * (1.0 - p.p));
  p.gamma_phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return p;
}

std::array<double, 3> random_axis(Rng &rng) {
  std::array<double, 3> n{};
  double norm = 0.0;
  while (norm < 1e-3) {
    for (auto &a : n) a = rng.normal();
    norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  }
  for (auto &a : n) a /= norm;
  return n;
}

Gate random_gate(Rng &rng, int num_qubits) {
  const int kinds = num_qubits >= 2 ? 5 : 4;
  const int q = rng.integer(0, num_qubits - 1);
  switch (rng.integer(0, kinds - 1)) {
  case 0:
    return HadamardGate{q};
  case 1:
    return make_t(q);
  case 2:
    return PhaseGate{q, rng.uniform(0.0, 2.0 * std::numbers::pi)};
  case 3:
    return RotationGate{q, rng.uniform(0.0, 2.0 * std::numbers::pi), random_axis(rng)};
  default: {
    int t = rng.integer(0, num_qubits - 2);
    if (t >= q) ++t;
    return CnotGate{q, t};
  }
  }
}

Circuit random_circuit(Rng &rng, int num_qubits, std::size_t num_gates) {
  Circuit c;
  c.num_qubits = num_qubits;
  for (std::size_t k = 0; k < num_gates; ++k) c.gates.push_back(random_gate(rng, num_qubits));
  return c;
}

} // namespace kdwork
