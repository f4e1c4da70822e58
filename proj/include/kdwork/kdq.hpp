#pragma once

// Kirkwood-Dirac quasiprobabilities q_if = Tr[U^dag Pi_f U Pi_i rho] of a unitary
// cycle. Rows index the initial eigenstate i, columns the final eigenstate f.

#include "kdwork/linalg.hpp"
#include "kdwork/system.hpp"

#include <array>
#include <vector>

namespace kdwork {

/// d x d real array, row-major, same indexing as KdqTable.
struct RealTable {
  std::size_t dim = 0;
  std::vector<double> values;

  double operator()(std::size_t i, std::size_t f) const { return values[i * dim + f]; }
  double &operator()(std::size_t i, std::size_t f) { return values[i * dim + f]; }
};

struct KdqTable {
  std::size_t dim = 0;
  CMatrix entries;
  std::vector<double> energies;
  double energy_scale = 1.0;

  complex_t operator()(std::size_t i, std::size_t f) const { return entries(i, f); }
  std::vector<complex_t> row_marginals() const;
  std::vector<complex_t> col_marginals() const;
  complex_t total() const;
};

struct KdqSplit {
  KdqTable population;
  KdqTable coherent;
};

/// k_if = <E_f|U|E_i>, stored with row i and column f.
struct TransitionAmplitudes {
  CMatrix k;
};

/// Rejects shape mismatches (InvalidArgument) and non-unitary U (ValidationError, 1e-10).
KdqTable kdq_table(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h);
/// Same trace formula for any Hermitian operator in place of rho (used for the
/// coherent part chi, which is not a state).
KdqTable kdq_table_operator(const CMatrix &u, const CMatrix &op, const Hamiltonian &h);

RealTable mhq(const KdqTable &t);
RealTable imag_part(const KdqTable &t);
/// Re q from (1/2) Tr[{U^dag Pi_f U, Pi_i} rho].
RealTable mhq_via_anticommutator(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h);
/// Im q from (1/2i) Tr[[U^dag Pi_f U, Pi_i] rho].
RealTable imag_via_commutator(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h);

/// Population part |k_if|^2 lambda_ii and coherent part sum'_{k != i} k_kf^* k_if lambda_ik,
/// both from transition amplitudes.
KdqSplit kdq_split(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h);
/// Two-point-measurement joint distribution, equal to the population part.
RealTable tpm_distribution(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h);
TransitionAmplitudes transition_amplitudes(const CMatrix &u, const Hamiltonian &h);

/// Closed-form single-qubit table for R(theta, n) on qubit_state(params).
KdqTable kdq_rotation_analytic(double theta, const std::array<double, 3> &axis,
                               const QubitStateParams &params, double energy_scale = 1.0);
/// Closed-form table of the Hadamard-like evolution exp(-i omega t (X+Z)/sqrt2).
KdqTable kdq_hadamard_evolution(double omega_t, const QubitStateParams &params,
                                double energy_scale = 1.0);

/// Largest deviation of the table's marginals from the state's populations
/// (rows) and the evolved populations (columns), and of the total from 1.
double marginal_residual(const KdqTable &t, const CMatrix &u, const DensityMatrix &rho);

} // namespace kdwork
