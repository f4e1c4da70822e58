#include "kdwork/verify.hpp"

#include "kdwork/circuit_parser.hpp"
#include "kdwork/decomposition.hpp"
#include "kdwork/error.hpp"
#include "kdwork/random.hpp"
#include "kdwork/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

namespace kdwork {

namespace {

double max_table_diff(const RealTable &a, const RealTable &b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

CMatrix random_matrix(Rng &rng, std::size_t d) {
  CMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = rng.complex_normal();
  return m;
}

struct Setup {
  int qubits;
  Hamiltonian h;
  CMatrix u;
  DensityMatrix rho;
};

Setup random_setup(Rng &rng) {
  const int l = rng.integer(1, 2);
  Hamiltonian h = build_hamiltonian(l, rng.uniform(0.5, 2.0));
  CMatrix u = random_unitary(rng, h.dim());
  DensityMatrix rho = random_state(rng, h.dim());
  return {l, std::move(h), std::move(u), std::move(rho)};
}

class Suite {
public:
  Suite(std::size_t draws, std::uint64_t seed, std::ostream *log)
      : draws_(draws), seed_(seed), log_(log) {}

  /// `body` returns the error of one draw; the check passes if every error <= tol.
  void randomized(const std::string &name, double tol, const std::function<double(Rng &)> &body,
                  std::size_t draws = 0) {
    const std::size_t n = draws ? draws : draws_;
    Rng rng(seed_ + 7919 * (result_.checks.size() + 1));
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, body(rng));
    record({name, worst <= tol, worst, tol, n});
  }

  void fixed(const std::string &name, double error, double tol) {
    record({name, error <= tol, error, tol, 1});
  }

  VerifyResult take() { return std::move(result_); }

private:
  void record(VerifyCheck c) {
    if (log_) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "[%s] %-58s max_err=%.3e tol=%.0e draws=%zu\n",
                    c.passed ? "PASS" : "FAIL", c.name.c_str(), c.max_error, c.tolerance, c.draws);
      *log_ << buf;
    }
    result_.checks.push_back(std::move(c));
  }

  std::size_t draws_;
  std::uint64_t seed_;
  std::ostream *log_;
  VerifyResult result_;
};

} // namespace

bool VerifyResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck &c) { return c.passed; });
}

std::size_t draws_for_level(const std::string &level) {
  if (level == "quick") return 100;
  if (level == "full") return 10000;
  throw InvalidArgument("unknown verification level '" + level + "' (expected quick or full)");
}

VerifyResult run_verify(std::size_t draws, std::uint64_t seed, std::ostream *log) {
  Suite s(draws, seed, log);
  // Decomposition and parser checks are costlier per draw.
  const std::size_t heavy = std::max<std::size_t>(10, draws / 10);

  s.randomized("linalg: kron associativity", 1e-13, [](Rng &rng) {
    const CMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2);
    return max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c)));
  });
  s.randomized("linalg: trace cyclicity", 1e-12, [](Rng &rng) {
    const CMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4), c = random_matrix(rng, 4);
    return std::abs(trace(a * b * c) - trace(c * a * b));
  });
  s.randomized("linalg: adjoint(AB) = adjoint(B) adjoint(A)", 1e-14, [](Rng &rng) {
    const CMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    return max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a));
  });
  s.randomized("system: thermal_state -> effective_beta round trip", 1e-10, [](Rng &rng) {
    const Hamiltonian h = build_hamiltonian(1, 1.0);
    const double beta = rng.uniform(-5.0, 5.0);
    return std::abs(effective_beta(thermal_state(h, beta), h) - beta);
  });
  s.randomized("system: dephase_split reassembles the state", 0.0, [](Rng &rng) {
    const DensityMatrix rho = random_state(rng, 4);
    const StateSplit sp = dephase_split(rho);
    double diag = 0.0;
    for (std::size_t k = 0; k < 4; ++k) diag = std::max(diag, std::abs(sp.coherent(k, k)));
    return std::max(diag, max_abs_diff(sp.dephased.matrix() + sp.coherent, rho.matrix()));
  });
  s.randomized("gates: U = suffix(j) prefix(j) for all j", 1e-13, [](Rng &rng) {
    const Circuit c = random_circuit(rng, rng.integer(1, 2), rng.integer(0, 6));
    const CMatrix u = circuit_unitary(c);
    double worst = is_unitary(u, 1e-10) ? 0.0 : 1.0;
    for (std::size_t j = 0; j <= c.gates.size(); ++j) {
      worst = std::max(worst, max_abs_diff(u, suffix_unitary(c, j) * prefix_unitary(c, j)));
    }
    return worst;
  });
  s.randomized("parser: parse -> serialize -> parse fixed point", 0.0, [](Rng &rng) {
    CircuitFile f;
    f.circuit = random_circuit(rng, 2, rng.integer(0, 5));
    f.energy_scale = rng.uniform(0.5, 2.0);
    f.state.kind = StateSpec::Kind::Product;
    f.state.parts = {StateSpec{StateSpec::Kind::PureBloch, {rng.uniform(0, 3), rng.uniform(0, 6)}, {}, {}},
                     StateSpec{StateSpec::Kind::Qubit, {0.5, 0.25, rng.uniform(0, 6)}, {}, {}}};
    const CircuitFile once = parse_circuit(serialize_circuit(f));
    const CircuitFile twice = parse_circuit(serialize_circuit(once));
    return (once == f && twice == once) ? 0.0 : 1.0;
  }, heavy);

  s.randomized("kdq: normalization and marginals", 1e-12, [](Rng &rng) {
    const Setup x = random_setup(rng);
    return marginal_residual(kdq_table(x.u, x.rho, x.h), x.u, x.rho);
  });
  s.randomized("kdq: Re q equals the anticommutator form", 1e-13, [](Rng &rng) {
    const Setup x = random_setup(rng);
    return max_table_diff(mhq(kdq_table(x.u, x.rho, x.h)), mhq_via_anticommutator(x.u, x.rho, x.h));
  });
  s.randomized("kdq: Im q equals the commutator form", 1e-13, [](Rng &rng) {
    const Setup x = random_setup(rng);
    return max_table_diff(imag_part(kdq_table(x.u, x.rho, x.h)), imag_via_commutator(x.u, x.rho, x.h));
  });
  s.randomized("kdq: linearity in the state", 1e-13, [](Rng &rng) {
    const Setup x = random_setup(rng);
    const DensityMatrix other = random_state(rng, x.h.dim());
    const double a = rng.uniform();
    const DensityMatrix mix(a * x.rho.matrix() + (1.0 - a) * other.matrix());
    const CMatrix expected = a * kdq_table(x.u, x.rho, x.h).entries +
                             (1.0 - a) * kdq_table(x.u, other, x.h).entries;
    return max_abs_diff(kdq_table(x.u, mix, x.h).entries, expected);
  });
  s.randomized("kdq: global phase invariance", 1e-13, [](Rng &rng) {
    const Setup x = random_setup(rng);
    const CMatrix phased = std::polar(1.0, rng.uniform(0.0, 6.3)) * x.u;
    return max_abs_diff(kdq_table(phased, x.rho, x.h).entries, kdq_table(x.u, x.rho, x.h).entries);
  });
  s.randomized("kdq: population + coherent = full", 1e-12, [](Rng &rng) {
    const Setup x = random_setup(rng);
    const KdqSplit sp = kdq_split(x.u, x.rho, x.h);
    return max_abs_diff(sp.population.entries + sp.coherent.entries, kdq_table(x.u, x.rho, x.h).entries);
  });
  s.randomized("kdq: rotation closed form vs numeric", 1e-12, [](Rng &rng) {
    const QubitStateParams p = random_qubit_params(rng);
    const double theta = rng.uniform(0.0, 4 * std::numbers::pi);
    const auto n = random_axis(rng);
    const KdqTable numeric = kdq_table(rotation_matrix(theta, n), qubit_state(p), build_hamiltonian(1, 1.0));
    return max_abs_diff(kdq_rotation_analytic(theta, n, p).entries, numeric.entries);
  });
  s.randomized("kdq: Hadamard-like evolution vs rotation", 1e-12, [](Rng &rng) {
    const QubitStateParams p = random_qubit_params(rng);
    const double wt = rng.uniform(0.0, 2 * std::numbers::pi);
    const double r = 1.0 / std::numbers::sqrt2;
    return max_abs_diff(kdq_hadamard_evolution(wt, p).entries,
                        kdq_rotation_analytic(2 * wt, {r, 0.0, r}, p).entries);
  });

  s.randomized("thermo: rotation work closed form vs numeric", 1e-12, [](Rng &rng) {
    const QubitStateParams p = random_qubit_params(rng);
    const double theta = rng.uniform(0.0, 4 * std::numbers::pi);
    const auto n = random_axis(rng);
    const double numeric =
        extractable_work(kdq_table(rotation_matrix(theta, n), qubit_state(p), build_hamiltonian(1, 1.0)));
    return std::abs(work_rotation_analytic(theta, n, p) - numeric);
  });
  s.randomized("thermo: evolution work closed form vs numeric", 1e-12, [](Rng &rng) {
    const QubitStateParams p = random_qubit_params(rng);
    const double wt = rng.uniform(0.0, 2 * std::numbers::pi);
    const double r = 1.0 / std::numbers::sqrt2;
    const Hamiltonian h = build_hamiltonian(1, 1.0);
    const CMatrix u = rotation_matrix(2 * wt, {r, 0.0, r});
    const auto [pop, coh] = work_split(kdq_split(u, qubit_state(p), h));
    const WorkParts w = work_evolution_analytic(wt, p);
    return std::max(std::abs(w.population - pop), std::abs(w.coherent - coh));
  });
  s.randomized("thermo: Gibbs input extracts no work", 1e-12, [](Rng &rng) {
    const Setup x = random_setup(rng);
    const DensityMatrix g = thermal_state(x.h, rng.uniform(0.0, 3.0));
    return std::max(0.0, extractable_work(kdq_table(x.u, g, x.h)));
  });
  s.randomized("thermo: Jarzynski equality for Gibbs input", 1e-10, [](Rng &rng) {
    const Setup x = random_setup(rng);
    const double beta = rng.uniform(0.0, 2.0);
    return std::abs(jarzynski(x.u, thermal_state(x.h, beta), beta, x.h).expectation - 1.0);
  });
  s.randomized("thermo: Jarzynski expectation = 1 + Gamma", 1e-12, [](Rng &rng) {
    const Setup x = random_setup(rng);
    const double beta = rng.uniform(0.0, 2.0);
    // Gibbs populations plus coherences small enough to keep the matrix diagonally dominant.
    const DensityMatrix g = thermal_state(x.h, beta);
    const std::size_t d = x.h.dim();
    double pmin = 1.0;
    for (std::size_t k = 0; k < d; ++k) pmin = std::min(pmin, g(k, k).real());
    CMatrix m = g.matrix();
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = r + 1; c < d; ++c) {
        const complex_t z = std::polar(rng.uniform(0.0, pmin / static_cast<double>(d)), rng.uniform(0.0, 6.3));
        m(r, c) = z;
        m(c, r) = std::conj(z);
      }
    const JarzynskiReport j = jarzynski(x.u, DensityMatrix(m), beta, x.h);
    return std::abs(j.expectation - 1.0 - j.gamma_correction);
  });
  s.randomized("thermo: first moment has no imaginary part", 1e-12, [](Rng &rng) {
    const Setup x = random_setup(rng);
    return std::abs(first_moment_imag_check(kdq_table(x.u, x.rho, x.h)));
  });
  s.randomized("thermo: variance imaginary part, sum vs commutator", 1e-12, [](Rng &rng) {
    const Setup x = random_setup(rng);
    return std::abs(work_variance_imag(kdq_table(x.u, x.rho, x.h)) -
                    work_variance_imag_commutator(x.u, x.rho, x.h));
  });
  s.randomized("thermo: work components sum to the total", 1e-12, [](Rng &rng) {
    const Hamiltonian h = build_hamiltonian(2, rng.uniform(0.5, 2.0));
    const KdqTable t = kdq_table(random_unitary(rng, 4), random_state(rng, 4), h);
    double sum = 0.0;
    for (const auto &[k, v] : work_components(t)) sum += v;
    return std::abs(sum - extractable_work(t));
  });
  s.randomized("thermo: qubit without inversion, W > 0 implies coherent part > 0", 0.0, [](Rng &rng) {
    QubitStateParams p = random_qubit_params(rng);
    p.p *= 0.5;
    p.gamma_abs = std::min(p.gamma_abs, std::sqrt(p.p * (1.0 - p.p)));
    const Hamiltonian h = build_hamiltonian(1, 1.0);
    const CMatrix u = random_unitary(rng, 2);
    const auto [pop, coh] = work_split(kdq_split(u, qubit_state(p), h));
    const double w = extractable_work(kdq_table(u, qubit_state(p), h));
    if (pop > 1e-12) return 1.0;
    return (w > 1e-12 && coh <= 0.0) ? 1.0 : 0.0;
  });

  s.randomized("decomposition: weighted-sum identity", 1e-12, [](Rng &rng) {
    const Circuit c = random_circuit(rng, rng.integer(1, 2), rng.integer(1, 6));
    const Hamiltonian h = build_hamiltonian(c.num_qubits, 1.0);
    return decomposition_identity(c, random_state(rng, h.dim()), h).residual_max;
  }, heavy);
  s.randomized("decomposition: full = constituent + gap per gate", 1e-12, [](Rng &rng) {
    const Circuit c = random_circuit(rng, rng.integer(1, 2), rng.integer(1, 5));
    const Hamiltonian h = build_hamiltonian(c.num_qubits, 1.0);
    const DensityMatrix rho = random_state(rng, h.dim());
    const KdqTable full = kdq_table(circuit_unitary(c), rho, h);
    double worst = 0.0;
    for (std::size_t j = 0; j < c.gates.size(); ++j) {
      const GateGapReport g = kdq_gap(c, j, rho, h);
      worst = std::max(worst, max_abs_diff(full.entries, g.constituent.entries + g.gap));
    }
    return worst;
  }, heavy);
  s.randomized("decomposition: two-qubit factorization", 1e-12, [](Rng &rng) {
    const Hamiltonian h2 = build_hamiltonian(2, 1.0);
    return factorization_check(random_unitary(rng, 2), random_unitary(rng, 2), random_state(rng, 2),
                               random_state(rng, 2), h2);
  });

  {
    // Operator words are written right-to-left (rightmost gate first).
    const char *words[] = {"HHT", "THH", "HTH", "TTH", "HTT", "THT", "HHH", "TTT"};
    const bool expected[8][4] = {
        {true, false, true, false},  {false, true, false, true}, {false, false, false, false},
        {true, true, false, false},  {false, false, true, true}, {false, true, true, false},
        {true, false, false, true},  {true, true, true, true}};
    const Hamiltonian h = build_hamiltonian(1, 1.0);
    double mismatches = 0.0;
    for (int k = 0; k < 8; ++k) {
      const CommutationReport r = commutation_screen(circuit_from_operator_word(words[k]), h);
      for (int c = 0; c < 4; ++c) mismatches += (r.checks[c].vanishes != expected[k][c]);
    }
    s.fixed("decomposition: depth-3 commutation pattern over {H, T}", mismatches, 0.0);
  }

  return s.take();
}

} // namespace kdwork
