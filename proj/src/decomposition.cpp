#include "kdwork/decomposition.hpp"

#include "kdwork/error.hpp"

#include <algorithm>
#include <cmath>

namespace kdwork {

namespace {

CommutatorCheck check_against_projectors(const std::string &label, const CMatrix &op,
                                         const Hamiltonian &h) {
  CommutatorCheck c;
  c.label = label;
  for (const auto &p : h.projectors) c.norms.push_back(frobenius_norm(commutator(p, op)));
  c.max_norm = *std::max_element(c.norms.begin(), c.norms.end());
  c.vanishes = c.max_norm <= kCommutatorTol;
  return c;
}

void require_circuit_dim(const Circuit &c, const Hamiltonian &h) {
  if ((std::size_t{1} << c.num_qubits) != h.dim()) {
    throw InvalidArgument("circuit on " + std::to_string(c.num_qubits) +
                          " qubit(s) does not match Hamiltonian dimension " +
                          std::to_string(h.dim()));
  }
}

} // namespace

bool CommutationReport::any_satisfied() const {
  return std::any_of(conditions.begin(), conditions.end(),
                     [](const CommutationCondition &c) { return c.satisfied; });
}

CMatrix m_operator(const Circuit &c, std::size_t j, std::size_t i, std::size_t f,
                   const Hamiltonian &h) {
  require_circuit_dim(c, h);
  const std::size_t n = c.gates.size();
  if (n == 0 || j >= n) throw InvalidArgument("m_operator: gate index out of range");
  if (i >= h.dim() || f >= h.dim()) throw InvalidArgument("m_operator: eigenstate index out of range");
  const std::size_t d = h.dim();
  if (n == 1) return CMatrix(d, d);

  const CMatrix &pi_i = h.projectors[i];
  const CMatrix &pi_f = h.projectors[f];
  const CMatrix full_dag = adjoint(circuit_unitary(c));
  const CMatrix gate = gate_matrix(c.gates[j], c.num_qubits);

  if (j == 0) {
    return mat_mul(full_dag, mat_mul(commutator(pi_f, suffix_unitary(c, 1)), mat_mul(gate, pi_i)));
  }
  const CMatrix before = prefix_unitary(c, j);
  if (j == n - 1) {
    return -1.0 * mat_mul(full_dag, mat_mul(pi_f, mat_mul(gate, commutator(pi_i, before))));
  }
  const CMatrix first =
      mat_mul(commutator(pi_f, suffix_unitary(c, j + 1)), mat_mul(gate, mat_mul(pi_i, before)));
  const CMatrix second = mat_mul(pi_f, mat_mul(suffix_unitary(c, j), commutator(pi_i, before)));
  return mat_mul(full_dag, first - second);
}

GateGapReport kdq_gap(const Circuit &c, std::size_t j, const DensityMatrix &rho,
                      const Hamiltonian &h) {
  require_circuit_dim(c, h);
  if (j >= c.gates.size()) throw InvalidArgument("kdq_gap: gate index out of range");
  const CMatrix before = prefix_unitary(c, j);
  const DensityMatrix rho_j(mat_mul(before, mat_mul(rho.matrix(), adjoint(before))));
  GateGapReport r;
  r.j = j;
  r.constituent = kdq_table(gate_matrix(c.gates[j], c.num_qubits), rho_j, h);
  r.gap = CMatrix(h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t f = 0; f < h.dim(); ++f)
      r.gap(i, f) = trace(mat_mul(m_operator(c, j, i, f, h), rho.matrix()));
  return r;
}

DecompositionReport decomposition_identity(const Circuit &c, const DensityMatrix &rho,
                                           const Hamiltonian &h) {
  require_circuit_dim(c, h);
  if (c.gates.empty()) throw InvalidArgument("decomposition_identity: circuit has no gates");
  const std::size_t n = c.gates.size();
  const std::size_t d = h.dim();
  DecompositionReport r;
  r.full = kdq_table(circuit_unitary(c), rho, h);
  r.correction = CMatrix(d, d);
  CMatrix constituent_sum(d, d);
  for (std::size_t j = 0; j < n; ++j) {
    r.per_gate.push_back(kdq_gap(c, j, rho, h));
    r.correction += r.per_gate.back().gap;
    constituent_sum += r.per_gate.back().constituent.entries;
  }
  const CMatrix rebuilt = (1.0 / static_cast<double>(n)) * (constituent_sum + r.correction);
  r.residual_max = max_abs_diff(rebuilt, r.full.entries);
  return r;
}

CommutationReport commutation_screen(const Circuit &c, const Hamiltonian &h) {
  require_circuit_dim(c, h);
  const std::size_t n = c.gates.size();
  CommutationReport r;
  r.num_gates = n;
  auto g = [&](std::size_t k) { return gate_matrix(c.gates[k], c.num_qubits); };
  if (n == 2) {
    const CMatrix u = g(0), v = g(1);
    r.checks.push_back(check_against_projectors("[Pi_i, U]", u, h));
    r.checks.push_back(check_against_projectors("[Pi_f, V]", v, h));
    r.conditions.push_back({"[Pi_i, U] = 0", {0}, r.checks[0].vanishes});
    r.conditions.push_back({"[Pi_f, V] = 0", {1}, r.checks[1].vanishes});
  } else if (n == 3) {
    const CMatrix u = g(0), v = g(1), m = g(2);
    r.checks.push_back(check_against_projectors("[Pi_f, MV]", mat_mul(m, v), h));
    r.checks.push_back(check_against_projectors("[Pi_f, M]", m, h));
    r.checks.push_back(check_against_projectors("[Pi_i, U]", u, h));
    r.checks.push_back(check_against_projectors("[Pi_i, VU]", mat_mul(v, u), h));
    r.conditions.push_back({"[Pi_f, MV] = 0", {0}, r.checks[0].vanishes});
    r.conditions.push_back(
        {"[Pi_f, M] = [Pi_i, U] = 0", {1, 2}, r.checks[1].vanishes && r.checks[2].vanishes});
    r.conditions.push_back({"[Pi_i, VU] = 0", {3}, r.checks[3].vanishes});
  } else {
    throw InvalidArgument("commutation_screen: defined for circuits of 2 or 3 gates, got " +
                          std::to_string(n));
  }
  return r;
}

double factorization_residual(const CMatrix &u, const CMatrix &v, const DensityMatrix &rho,
                              const Hamiltonian &h2) {
  if (h2.num_qubits != 2) throw InvalidArgument("factorization_residual: needs a two-qubit Hamiltonian");
  const DensityMatrix rho_a = reduced_state(rho, 2, 0);
  const DensityMatrix rho_b = reduced_state(rho, 2, 1);
  const Hamiltonian h1 = build_hamiltonian(1, h2.energy_scale);
  const KdqTable joint = kdq_table(kron(u, v), rho, h2);
  const KdqTable qa = kdq_table(u, rho_a, h1);
  const KdqTable qb = kdq_table(v, rho_b, h1);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t f = 0; f < 4; ++f) {
      const complex_t product = qa(i / 2, f / 2) * qb(i % 2, f % 2);
      worst = std::max(worst, std::abs(joint(i, f) - product));
    }
  return worst;
}

double factorization_check(const CMatrix &u, const CMatrix &v, const DensityMatrix &sigma,
                           const DensityMatrix &tau, const Hamiltonian &h2) {
  if (u.rows() != 2 || v.rows() != 2 || sigma.dim() != 2 || tau.dim() != 2) {
    throw InvalidArgument("factorization_check: expects single-qubit gates and states");
  }
  if (h2.num_qubits != 2) throw InvalidArgument("factorization_check: needs a two-qubit Hamiltonian");
  const Hamiltonian h1 = build_hamiltonian(1, h2.energy_scale);
  const KdqTable joint = kdq_table(kron(u, v), product_state(sigma, tau), h2);
  const KdqTable qa = kdq_table(u, sigma, h1);
  const KdqTable qb = kdq_table(v, tau, h1);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t f = 0; f < 4; ++f) {
      worst = std::max(worst, std::abs(joint(i, f) - qa(i / 2, f / 2) * qb(i % 2, f % 2)));
    }
  return worst;
}

bool classicality_check(const CMatrix &u, const Hamiltonian &h, int trials, std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const KdqTable q = kdq_table(u, random_state(rng, h.dim()), h);
    for (const auto &z : q.entries.entries()) {
      if (std::abs(z.imag()) > 1e-10 || z.real() < -1e-10) return false;
    }
  }
  return true;
}

} // namespace kdwork
