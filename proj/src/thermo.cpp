#include "kdwork/thermo.hpp"

#include "kdwork/error.hpp"

#include <cmath>
#include <numbers>

namespace kdwork {

namespace {

constexpr complex_t kI{0.0, 1.0};
constexpr std::array<std::pair<int, int>, 5> kUpPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}};

void require_two_qubit(const KdqTable &t, const char *op) {
  if (t.dim != 4) {
    throw InvalidArgument(std::string(op) + ": defined for two-qubit tables (dim 4), got dim " +
                          std::to_string(t.dim));
  }
}

} // namespace

double extractable_work(const KdqTable &t) {
  double w = 0.0;
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t f = 0; f < t.dim; ++f)
      if (i != f) w += t(i, f).real() * (t.energies[i] - t.energies[f]);
  return w;
}

std::pair<double, double> work_split(const KdqSplit &split) {
  return {extractable_work(split.population), extractable_work(split.coherent)};
}

std::map<std::pair<int, int>, double> work_components(const KdqTable &t) {
  require_two_qubit(t, "work_components");
  std::map<std::pair<int, int>, double> out;
  for (const auto &[i, f] : kUpPairs) {
    const double weight = (i == 0 && f == 3) ? 2.0 : 1.0;
    out[{i, f}] = 2.0 * t.energy_scale * weight * (t(f, i).real() - t(i, f).real());
  }
  return out;
}

AnomalyNorms anomaly_norms(const KdqTable &t) {
  require_two_qubit(t, "anomaly_norms");
  AnomalyNorms n;
  for (const auto &[i, f] : kUpPairs) {
    const double weight = (i == 0 && f == 3) ? 2.0 : 1.0;
    const double up = weight * t(i, f).real();
    const double down = weight * t(f, i).real();
    if (up > 0.0) n.pos_up += up * up;
    if (up < kNegativeMhqThreshold) n.neg_up += up * up;
    if (down > 0.0) n.pos_down += down * down;
    if (down < kNegativeMhqThreshold) n.neg_down += down * down;
  }
  n.pos_up = std::sqrt(n.pos_up);
  n.neg_up = std::sqrt(n.neg_up);
  n.pos_down = std::sqrt(n.pos_down);
  n.neg_down = std::sqrt(n.neg_down);
  return n;
}

WorkReport work_report(const CMatrix &u, const DensityMatrix &rho, const Hamiltonian &h) {
  const KdqTable t = kdq_table(u, rho, h);
  const auto [pop, coh] = work_split(kdq_split(u, rho, h));
  WorkReport r;
  r.total = extractable_work(t);
  r.population = pop;
  r.coherent = coh;
  if (t.dim == 4) {
    r.components = work_components(t);
    r.norms = anomaly_norms(t);
    r.has_norms = true;
  }
  return r;
}

JarzynskiReport jarzynski(const CMatrix &u, const DensityMatrix &rho, double beta,
                          const Hamiltonian &h, bool allow_non_gibbs) {
  if (!allow_non_gibbs) {
    const DensityMatrix gibbs = thermal_state(h, beta);
    for (std::size_t k = 0; k < h.dim(); ++k) {
      if (std::abs(rho(k, k) - gibbs(k, k)) > 1e-10) {
        throw ValidationError("jarzynski: populations do not match the Gibbs state at beta = " +
                              std::to_string(beta));
      }
    }
  }
  const KdqTable full = kdq_table(u, rho, h);
  const KdqTable coherent = kdq_split(u, rho, h).coherent;
  JarzynskiReport r;
  r.beta = beta;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t f = 0; f < h.dim(); ++f) {
      const double w = std::exp(-beta * (h.eigenvalues[f] - h.eigenvalues[i]));
      r.expectation += full(i, f) * w;
      r.gamma_correction += coherent(i, f) * w;
    }
  }
  return r;
}

double work_variance_imag(const KdqTable &t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t f = 0; f < t.dim; ++f) s += t.energies[i] * t.energies[f] * t(i, f).imag();
  return -2.0 * s;
}

double work_variance_imag_commutator(const CMatrix &u, const DensityMatrix &rho,
                                     const Hamiltonian &h) {
  const CMatrix hm = h.matrix();
  const CMatrix evolved_h = mat_mul(adjoint(u), mat_mul(hm, u));
  return (kI * trace(mat_mul(commutator(evolved_h, hm), rho.matrix()))).real();
}

double first_moment_imag_check(const KdqTable &t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t f = 0; f < t.dim; ++f) s += t(i, f).imag() * (t.energies[i] - t.energies[f]);
  return s;
}

double work_rotation_analytic(double theta, const std::array<double, 3> &n,
                              const QubitStateParams &params, double energy_scale) {
  const KdqTable t = kdq_rotation_analytic(theta, n, params, energy_scale);
  const double s = std::sin(theta / 2);
  return 2.0 * energy_scale * ((n[0] * n[0] + n[1] * n[1]) * s * s - 2.0 * t(0, 1).real());
}

WorkParts work_evolution_analytic(double omega_t, const QubitStateParams &params,
                                  double energy_scale) {
  const double s = std::sin(omega_t);
  const double c = std::cos(omega_t);
  const double phi = params.gamma_phase;
  WorkParts w;
  w.population = energy_scale * (2.0 * params.p - 1.0) * s * s;
  w.coherent = 4.0 * energy_scale * params.gamma_abs / std::numbers::sqrt2 *
               (std::sin(phi) * c * s - std::cos(phi) * s * s / std::numbers::sqrt2);
  w.total = w.population + w.coherent;
  return w;
}

} // namespace kdwork
