#pragma once

// Work functionals over KDQ tables.

#include "kdwork/kdq.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace kdwork {

struct AnomalyNorms {
  double pos_up = 0.0;   // positive part of r_{i<f}
  double neg_up = 0.0;   // negative part of r_{i<f}
  double pos_down = 0.0; // positive part of r_{i>f}
  double neg_down = 0.0; // negative part of r_{i>f}
};

struct WorkReport {
  double total = 0.0;
  double population = 0.0;
  double coherent = 0.0;
  std::map<std::pair<int, int>, double> components; // two qubits only
  bool has_norms = false;
  AnomalyNorms norms;
};

struct JarzynskiReport {
  double beta = 0.0;
  complex_t expectation;
  complex_t gamma_correction;
};

struct WorkParts {
  double total = 0.0;
  double population = 0.0;
  double coherent = 0.0;
};

inline constexpr double kNegativeMhqThreshold = -1e-10;

/// sum_{i != f} Re q_if (E_i - E_f)
double extractable_work(const KdqTable &t);
/// Work of the population and coherent parts of a split.
std::pair<double, double> work_split(const KdqSplit &split);
/// W_if = 2E(1 + delta_i0 delta_f3)(Re q_fi - Re q_if) for (0,1),(0,2),(0,3),(1,3),(2,3).
std::map<std::pair<int, int>, double> work_components(const KdqTable &t);
/// Norms of the positive / negative parts of the weighted MHQ vectors
/// (q01, q02, 2 q03, q13, q23) and (q10, q20, 2 q30, q31, q32).
AnomalyNorms anomaly_norms(const KdqTable &t);

/// Full report: total, population/coherent parts, and for two qubits the
/// components and anomaly norms.
WorkReport work_report(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h);

/// <e^{-beta W}> = sum q_if e^{-beta(E_f - E_i)} and Gamma from the coherent part.
/// Requires the dephased state to be the beta-Gibbs state (1e-10) unless
/// allow_non_gibbs is set; otherwise throws ValidationError.
JarzynskiReport jarzynski(const CMatrix &u, const DensityMatrix &rho, double beta,
                          const Hamiltonian &h, bool allow_non_gibbs = false);

/// -2 sum_if E_i E_f Im q_if
double work_variance_imag(const KdqTable &t);
/// Re(i Tr[[U^dag H U, H] rho]), the same quantity from the commutator.
double work_variance_imag_commutator(const CMatrix &u, const DensityMatrix &rho,
                                     const Hamiltonian &h);
/// sum_if Im q_if (E_i - E_f); vanishes for every valid input.
double first_moment_imag_check(const KdqTable &t);

/// 2E[(n_x^2 + n_y^2) sin^2(theta/2) - 2 Re q_{down,up}] for a single-qubit rotation.
double work_rotation_analytic(double theta, const std::array<double, 3> &axis,
                              const QubitStateParams &params, double energy_scale = 1.0);
/// Closed-form work of the Hadamard-like evolution at time omega t.
WorkParts work_evolution_analytic(double omega_t, const QubitStateParams &params,
                                  double energy_scale = 1.0);

} // namespace kdwork
