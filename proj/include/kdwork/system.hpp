#pragma once

// Noninteracting qubit Hamiltonian E * sum_j Z_j, energy-eigenbasis conventions
// and state constructors.
//
// Storage basis: for one qubit index 0 = |down> (energy -E), index 1 = |up> (+E).
// Several qubits use lexicographic spin strings with qubit 0 as the most
// significant bit, so for two qubits k = 0..3 <-> dd, du, ud, uu with energies
// -2E, 0, 0, +2E.

#include "kdwork/linalg.hpp"

#include <string>
#include <vector>

namespace kdwork {

inline constexpr double kStateTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

struct Hamiltonian {
  int num_qubits = 0;
  double energy_scale = 0.0;
  std::vector<double> eigenvalues;
  std::vector<CMatrix> projectors;
  std::vector<std::string> basis_labels; // e.g. "du": qubit 0 down, qubit 1 up

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  CMatrix matrix() const;
};

Hamiltonian build_hamiltonian(int num_qubits, double energy_scale);

/// Validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
public:
  /// Throws ValidationError when any invariant fails.
  explicit DensityMatrix(CMatrix m);

  std::size_t dim() const noexcept { return m_.rows(); }
  const CMatrix &matrix() const noexcept { return m_; }
  complex_t operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
  CMatrix m_;
};

struct QubitStateParams {
  double p = 0.0;          // excited population <up|rho|up>
  double gamma_abs = 0.0;  // |<up|rho|down>|
  double gamma_phase = 0.0;
};

struct StateSplit {
  DensityMatrix dephased;
  CMatrix coherent;
};

/// rho with <up|rho|up> = p and <up|rho|down> = |gamma| e^{i phase}.
DensityMatrix qubit_state(const QubitStateParams &params);
/// cos(theta/2)|down> + e^{i phi} sin(theta/2)|up>.
DensityMatrix pure_state_bloch(double theta, double phi);
/// sqrt(p)|up> + e^{i phi} sqrt(1-p)|down>. The coherence <up|rho|down> has phase -phi.
DensityMatrix pure_state_pop_phase(double p, double phi);
DensityMatrix product_state(const DensityMatrix &a, const DensityMatrix &b);
/// Projector onto a normalized copy of `ket` (storage basis).
DensityMatrix pure_state(const std::vector<complex_t> &ket);

StateSplit dephase_split(const DensityMatrix &rho);
DensityMatrix thermal_state(const Hamiltonian &h, double beta);
/// Inverse temperature of a diagonal single-qubit state; fails for p in {0, 1}.
double effective_beta(const DensityMatrix &rho, const Hamiltonian &h);

/// Reduced state of one qubit of an L-qubit state.
DensityMatrix reduced_state(const DensityMatrix &rho, int num_qubits, int qubit);

/// Reorders a storage-basis operator to the up-first basis (index k -> d-1-k),
/// which is how single- and multi-qubit matrices are usually printed.
CMatrix to_up_first(const CMatrix &m);

} // namespace kdwork
