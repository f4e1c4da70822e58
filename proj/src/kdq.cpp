#include "kdwork/kdq.hpp"

#include "kdwork/error.hpp"

#include <cmath>
#include <numbers>

namespace kdwork {

namespace {

constexpr complex_t kI{0.0, 1.0};
constexpr double kUnitaryTol = 1e-10;

void check_inputs(const CMatrix &u, std::size_t state_dim, const Hamiltonian &h) {
  if (!u.is_square() || u.rows() != h.dim() || state_dim != h.dim()) {
    throw InvalidArgument("kdq: unitary " + u.shape_string() + ", state dimension " +
                          std::to_string(state_dim) + " and Hamiltonian dimension " +
                          std::to_string(h.dim()) + " disagree");
  }
  if (!is_unitary(u, kUnitaryTol)) throw ValidationError("kdq: evolution operator is not unitary");
}

KdqTable empty_table(const Hamiltonian &h) {
  KdqTable t;
  t.dim = h.dim();
  t.entries = CMatrix(t.dim, t.dim);
  t.energies = h.eigenvalues;
  t.energy_scale = h.energy_scale;
  return t;
}

KdqTable qubit_table(double energy_scale) {
  return empty_table(build_hamiltonian(1, energy_scale));
}

void require_unit_axis(const std::array<double, 3> &n) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(norm - 1.0) > 1e-12) throw InvalidArgument("rotation axis must have unit norm");
}

} // namespace

std::vector<complex_t> KdqTable::row_marginals() const {
  std::vector<complex_t> out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t f = 0; f < dim; ++f) out[i] += entries(i, f);
  return out;
}

std::vector<complex_t> KdqTable::col_marginals() const {
  std::vector<complex_t> out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t f = 0; f < dim; ++f) out[f] += entries(i, f);
  return out;
}

complex_t KdqTable::total() const {
  complex_t s{};
  for (const auto &z : entries.entries()) s += z;
  return s;
}

KdqTable kdq_table_operator(const CMatrix &u, const CMatrix &op, const Hamiltonian &h) {
  check_inputs(u, op.rows(), h);
  KdqTable t = empty_table(h);
  const CMatrix ud = adjoint(u);
  for (std::size_t f = 0; f < t.dim; ++f) {
    const CMatrix evolved_proj = mat_mul(ud, mat_mul(h.projectors[f], u));
    for (std::size_t i = 0; i < t.dim; ++i) {
      t.entries(i, f) = trace(mat_mul(evolved_proj, mat_mul(h.projectors[i], op)));
    }
  }
  return t;
}

KdqTable kdq_table(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h) {
  return kdq_table_operator(u, rho.matrix(), h);
}

RealTable mhq(const KdqTable &t) {
  RealTable r{t.dim, std::vector<double>(t.dim * t.dim)};
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t f = 0; f < t.dim; ++f) {
#ifdef KDWORK_INJECT_MHQ_SIGN_BUG
      r(i, f) = -t(i, f).real();
#else
      r(i, f) = t(i, f).real();
#endif
    }
  return r;
}

RealTable imag_part(const KdqTable &t) {
  RealTable r{t.dim, std::vector<double>(t.dim * t.dim)};
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t f = 0; f < t.dim; ++f) r(i, f) = t(i, f).imag();
  return r;
}

RealTable mhq_via_anticommutator(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h) {
  check_inputs(u, rho.dim(), h);
  const std::size_t d = h.dim();
  RealTable r{d, std::vector<double>(d * d)};
  const CMatrix ud = adjoint(u);
  for (std::size_t f = 0; f < d; ++f) {
    const CMatrix a = mat_mul(ud, mat_mul(h.projectors[f], u));
    for (std::size_t i = 0; i < d; ++i) {
      r(i, f) = 0.5 * trace(mat_mul(anticommutator(a, h.projectors[i]), rho.matrix())).real();
    }
  }
  return r;
}

RealTable imag_via_commutator(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h) {
  check_inputs(u, rho.dim(), h);
  const std::size_t d = h.dim();
  RealTable r{d, std::vector<double>(d * d)};
  const CMatrix ud = adjoint(u);
  for (std::size_t f = 0; f < d; ++f) {
    const CMatrix a = mat_mul(ud, mat_mul(h.projectors[f], u));
    for (std::size_t i = 0; i < d; ++i) {
      const complex_t tr = trace(mat_mul(commutator(a, h.projectors[i]), rho.matrix()));
      r(i, f) = (tr / (2.0 * kI)).real();
    }
  }
  return r;
}

TransitionAmplitudes transition_amplitudes(const CMatrix &u, const Hamiltonian &h) {
  check_inputs(u, u.rows(), h);
  const std::size_t d = h.dim();
  CMatrix k(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t f = 0; f < d; ++f) k(i, f) = u(f, i);
  return {std::move(k)};
}

KdqSplit kdq_split(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h) {
  check_inputs(u, rho.dim(), h);
  const CMatrix k = transition_amplitudes(u, h).k;
  const std::size_t d = h.dim();
  KdqSplit s{empty_table(h), empty_table(h)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t f = 0; f < d; ++f) {
      s.population.entries(i, f) = std::norm(k(i, f)) * rho(i, i).real();
      complex_t c{};
      for (std::size_t m = 0; m < d; ++m) {
        if (m != i) c += std::conj(k(m, f)) * k(i, f) * rho(i, m);
      }
      s.coherent.entries(i, f) = c;
    }
  }
  return s;
}

RealTable tpm_distribution(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h) {
  check_inputs(u, rho.dim(), h);
  const std::size_t d = h.dim();
  RealTable r{d, std::vector<double>(d * d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t f = 0; f < d; ++f) r(i, f) = std::norm(u(f, i)) * rho(i, i).real();
  return r;
}

KdqTable kdq_rotation_analytic(double theta, const std::array<double, 3> &n,
                               const QubitStateParams &params, double energy_scale) {
  require_unit_axis(n);
  const double p = params.p;
  const double s = std::sin(theta / 2);
  const complex_t f{n[0], n[1]};
  const complex_t g{std::cos(theta / 2), n[2] * s};
  const complex_t gm = std::polar(params.gamma_abs, -params.gamma_phase); // |gamma| e^{-i phi}
  const complex_t gp = std::conj(gm);
  const complex_t lower = gm * std::conj(f) * g * s;
  const complex_t upper = gp * f * std::conj(g) * s;
  KdqTable t = qubit_table(energy_scale);
  t.entries(0, 0) = kI * lower + (1.0 - p) * std::norm(g);
  t.entries(0, 1) = -kI * lower + (1.0 - p) * std::norm(f) * s * s;
  t.entries(1, 0) = -kI * upper + p * std::norm(f) * s * s;
  t.entries(1, 1) = kI * upper + p * std::norm(g);
  return t;
}

KdqTable kdq_hadamard_evolution(double omega_t, const QubitStateParams &params,
                                double energy_scale) {
  const double p = params.p;
  const double s = std::sin(omega_t);
  const complex_t g{std::cos(omega_t), s / std::numbers::sqrt2};
  const complex_t gm = std::polar(params.gamma_abs, -params.gamma_phase);
  const complex_t lower = gm * g * s / std::numbers::sqrt2;
  const complex_t upper = std::conj(lower);
  KdqTable t = qubit_table(energy_scale);
  t.entries(0, 0) = kI * lower + (1.0 - p) * std::norm(g);
  t.entries(0, 1) = -kI * lower + (1.0 - p) * 0.5 * s * s;
  t.entries(1, 0) = -kI * upper + p * 0.5 * s * s;
  t.entries(1, 1) = kI * upper + p * std::norm(g);
  return t;
}

double marginal_residual(const KdqTable &t, const CMatrix &u, const DensityMatrix &rho) {
  const CMatrix evolved = mat_mul(u, mat_mul(rho.matrix(), adjoint(u)));
  const auto rows = t.row_marginals();
  const auto cols = t.col_marginals();
  double worst = std::abs(t.total() - 1.0);
  for (std::size_t k = 0; k < t.dim; ++k) {
    worst = std::max(worst, std::abs(rows[k] - rho(k, k)));
    worst = std::max(worst, std::abs(cols[k] - evolved(k, k)));
  }
  return worst;
}

} // namespace kdwork
