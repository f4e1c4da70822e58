#pragma once

// Seeded generators of random unitaries, states and circuits.

#include "kdwork/gates.hpp"
#include "kdwork/system.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace kdwork {

class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  complex_t complex_normal() { return {normal(), normal()}; }

private:
  std::mt19937_64 engine_;
};

/// Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
CMatrix random_unitary(Rng &rng, std::size_t d);
DensityMatrix random_pure_state(Rng &rng, std::size_t d);
/// Full-rank mixed state G G^dag / Tr, G Ginibre.
DensityMatrix random_mixed_state(Rng &rng, std::size_t d);
/// Pure with probability 1/3, mixed otherwise.
DensityMatrix random_state(Rng &rng, std::size_t d);
/// (p, |gamma|, phi) with |gamma| uniform in [0, sqrt(p(1-p))].
QubitStateParams random_qubit_params(Rng &rng);
std::array<double, 3> random_axis(Rng &rng);
/// H, T, P(phi), R(theta, n), and CNOT when num_qubits >= 2.
Gate random_gate(Rng &rng, int num_qubits);
Circuit random_circuit(Rng &rng, int num_qubits, std::size_t num_gates);

} // namespace kdwork
