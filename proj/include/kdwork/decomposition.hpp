#pragma once

// Relation between the KDQs of a circuit U_N...U_1 and those of its gates.
// With rho_j = (U_j...U_1) rho (U_j...U_1)^dag,
//   q_if(full) - q_if^{U_{j+1}}(rho_j) = Tr[M_if^{(j)} rho]
// and summing over j,
//   q_if(full) = (1/N) (sum_j q_if^{U_{j+1}}(rho_j) + Q_if),  Q_if = sum_j Tr[M_if^{(j)} rho].

#include "kdwork/gates.hpp"
#include "kdwork/kdq.hpp"
#include "kdwork/random.hpp"

#include <string>
#include <vector>

namespace kdwork {

struct GateGapReport {
  std::size_t j = 0;   // gate U_{j+1}, i.e. circuit.gates[j]
  KdqTable constituent; // KDQ of gates[j] on rho_j
  CMatrix gap;          // Tr[M_if rho], indexed (i, f)
};

struct DecompositionReport {
  KdqTable full;
  std::vector<GateGapReport> per_gate;
  CMatrix correction;
  double residual_max = 0.0;
};

struct CommutatorCheck {
  std::string label;         // e.g. "[Pi_f, MV]"
  std::vector<double> norms; // Frobenius norm per projector index
  double max_norm = 0.0;
  bool vanishes = false;     // max_norm <= 1e-10
};

struct CommutationCondition {
  std::string label;
  std::vector<std::size_t> checks; // indices into CommutationReport::checks
  bool satisfied = false;
};

struct CommutationReport {
  std::size_t num_gates = 0;
  std::vector<CommutatorCheck> checks;
  std::vector<CommutationCondition> conditions;

  bool any_satisfied() const;
};

inline constexpr double kCommutatorTol = 1e-10;

/// Gap operator for gate index j (0-based). Zero matrix for a one-gate circuit.
CMatrix m_operator(const Circuit &c, std::size_t j, std::size_t i, std::size_t f,
                   const Hamiltonian &h);
GateGapReport kdq_gap(const Circuit &c, std::size_t j, const DensityMatrix &rho,
                      const Hamiltonian &h);
DecompositionReport decomposition_identity(const Circuit &c, const DensityMatrix &rho,
                                           const Hamiltonian &h);

/// Two gates (U then V): [Pi_i, U] = 0 and [Pi_f, V] = 0.
/// Three gates (U, V, M applied in that order):
///   [Pi_f, MV] = 0;  [Pi_f, M] = 0 and [Pi_i, U] = 0;  [Pi_i, VU] = 0.
CommutationReport commutation_screen(const Circuit &c, const Hamiltonian &h);

/// max_if |q^{U (x) V}_if(rho) - q^U_{a_i a_f}(rho_A) q^V_{b_i b_f}(rho_B)| where
/// k = 2a + b and rho_A, rho_B are the reduced states.
double factorization_residual(const CMatrix &u, const CMatrix &v, const DensityMatrix &rho,
                              const Hamiltonian &h2);
/// Same comparison for a product input sigma (x) tau.
double factorization_check(const CMatrix &u, const CMatrix &v, const DensityMatrix &sigma,
                           const DensityMatrix &tau, const Hamiltonian &h2);

/// True iff every KDQ of U on `trials` random states has |Im| <= 1e-10 and Re >= -1e-10.
bool classicality_check(const CMatrix &u, const Hamiltonian &h, int trials, std::uint64_t seed = 0);

} // namespace kdwork
