#include "support.hpp"

#include "kdwork/error.hpp"
#include "kdwork/gates.hpp"
#include "kdwork/kdq.hpp"

#include <doctest.h>

#include <numbers>

using namespace kdwork;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const complex_t kI{0, 1};

} // namespace

TEST_CASE("kdq_table matches the matrix-element formula") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int l = rng.integer(1, 3);
    const std::size_t d = std::size_t{1} << l;
    const auto h = build_hamiltonian(l, rng.uniform(0.2, 2.0));
    const CMatrix u = random_unitary(rng, d);
    const auto rho = random_state(rng, d);
    const auto t = kdq_table(u, rho, h);
    CHECK(max_abs_diff(t.entries, kdtest::naive_kdq(u, rho.matrix())) <= 1e-13);
    CHECK(t.energies == h.eigenvalues);
  }
}

TEST_CASE("marginals reproduce initial and evolved populations") {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix u = random_unitary(rng, 4);
    const auto rho = random_state(rng, 4);
    const auto t = kdq_table(u, rho, build_hamiltonian(2, 1.0));
    const CMatrix evolved = u * rho.matrix() * adjoint(u);
    const auto rows = t.row_marginals(), cols = t.col_marginals();
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(rows[k] - rho(k, k)) <= 1e-13);
      CHECK(std::abs(cols[k] - evolved(k, k)) <= 1e-13);
    }
    CHECK(std::abs(t.total() - 1.0) <= 1e-13);
    CHECK(marginal_residual(t, u, rho) <= 1e-13);
  }
}

TEST_CASE("Hadamard table closed forms") {
  Rng rng(33);
  const auto h = build_hamiltonian(1, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto prm = random_qubit_params(rng);
    const complex_t g = std::polar(prm.gamma_abs, prm.gamma_phase);
    const auto t = kdq_table(hadamard(), qubit_state(prm), h);
    CHECK(std::abs(t(0, 0) - ((1 - prm.p) - std::conj(g)) / 2.0) <= 1e-14);
    CHECK(std::abs(t(0, 1) - ((1 - prm.p) + std::conj(g)) / 2.0) <= 1e-14);
    CHECK(std::abs(t(1, 0) - (prm.p - g) / 2.0) <= 1e-14);
    CHECK(std::abs(t(1, 1) - (prm.p + g) / 2.0) <= 1e-14);
  }
}

TEST_CASE("Hadamard on p = |gamma| = 1/2, phase pi") {
  const auto t = kdq_table(hadamard(), qubit_state({0.5, 0.5, kPi}), build_hamiltonian(1, 1.0));
  CHECK(std::abs(t(0, 0) - 0.5) <= 1e-14);
  CHECK(std::abs(t(1, 0) - 0.5) <= 1e-14);
  CHECK(std::abs(t(0, 1)) <= 1e-14);
  CHECK(std::abs(t(1, 1)) <= 1e-14);
}

TEST_CASE("HTH on the Bloch state theta = phi = pi/2") {
  const auto h = build_hamiltonian(1, 1.0);
  const CMatrix u = circuit_unitary(circuit_from_operator_word("HTH"));
  // (|down> + i|up>)/sqrt2
  const auto rho = pure_state({1 / kSqrt2, kI / kSqrt2});
  CHECK(max_abs_diff(rho.matrix(), pure_state_bloch(kPi / 2, kPi / 2).matrix()) <= 1e-15);
  const auto r = mhq(kdq_table(u, rho, h));
  CHECK(std::abs(r(0, 1) - (1 - kSqrt2) / 4) <= 1e-14);
  CHECK(std::abs(r(1, 0) - 0.25) <= 1e-14);
}

TEST_CASE("HTH on the ket (|up> + i|down>)/sqrt2 swaps the two values") {
  const auto h = build_hamiltonian(1, 1.0);
  const CMatrix u = circuit_unitary(circuit_from_operator_word("HTH"));
  const auto rho = pure_state({kI / kSqrt2, 1 / kSqrt2});
  const auto r = mhq(kdq_table(u, rho, h));
  CHECK(std::abs(r(0, 1) - 0.25) <= 1e-14);
  CHECK(std::abs(r(1, 0) - (1 - kSqrt2) / 4) <= 1e-14);
}

TEST_CASE("Re and Im agree with the anticommutator and commutator forms") {
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const int l = rng.integer(1, 2);
    const std::size_t d = std::size_t{1} << l;
    const auto h = build_hamiltonian(l, 1.0);
    const CMatrix u = random_unitary(rng, d);
    const auto rho = random_state(rng, d);
    const auto t = kdq_table(u, rho, h);
    const auto re = mhq(t), im = imag_part(t);
    const auto re2 = mhq_via_anticommutator(u, rho, h), im2 = imag_via_commutator(u, rho, h);
    for (std::size_t k = 0; k < d * d; ++k) {
      CHECK(std::abs(re.values[k] - re2.values[k]) <= 1e-14);
      CHECK(std::abs(im.values[k] - im2.values[k]) <= 1e-14);
    }
  }
}

TEST_CASE("diagonal states give real, non-negative KDQs equal to the TPM distribution") {
  Rng rng(35);
  const auto h = build_hamiltonian(2, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix u = random_unitary(rng, 4);
    const auto rho = dephase_split(random_state(rng, 4)).dephased;
    const auto t = kdq_table(u, rho, h);
    const auto tpm = tpm_distribution(u, rho, h);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t f = 0; f < 4; ++f) {
        CHECK(std::abs(t(i, f).imag()) <= 1e-15);
        CHECK(t(i, f).real() >= -1e-15);
        // |<f|U|i>|^2 p_i
        CHECK(std::abs(tpm(i, f) - std::norm(u(f, i)) * rho(i, i).real()) <= 1e-15);
        CHECK(std::abs(t(i, f).real() - tpm(i, f)) <= 1e-14);
      }
  }
}

TEST_CASE("population + coherent split") {
  Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const int l = rng.integer(1, 2);
    const std::size_t d = std::size_t{1} << l;
    const auto h = build_hamiltonian(l, 1.0);
    const CMatrix u = random_unitary(rng, d);
    const auto rho = random_state(rng, d);
    const auto s = kdq_split(u, rho, h);
    const auto parts = dephase_split(rho);
    CHECK(max_abs_diff(s.population.entries + s.coherent.entries, kdq_table(u, rho, h).entries) <= 1e-14);
    CHECK(max_abs_diff(s.population.entries, kdq_table(u, parts.dephased, h).entries) <= 1e-14);
    CHECK(max_abs_diff(s.coherent.entries, kdq_table_operator(u, parts.coherent, h).entries) <= 1e-14);
    // the coherent part has vanishing marginals
    for (auto m : s.coherent.row_marginals()) CHECK(std::abs(m) <= 1e-14);
  }
}

TEST_CASE("transition amplitudes") {
  Rng rng(37);
  const CMatrix u = random_unitary(rng, 4);
  const auto k = transition_amplitudes(u, build_hamiltonian(2, 1.0)).k;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t f = 0; f < 4; ++f) CHECK(k(i, f) == u(f, i));
}

TEST_CASE("single-qubit rotation closed form") {
  Rng rng(38);
  for (int trial = 0; trial < 200; ++trial) {
    const auto prm = random_qubit_params(rng);
    const auto n = random_axis(rng);
    const double th = rng.uniform(-2 * kPi, 2 * kPi);
    const double e = rng.uniform(0.1, 3);
    const auto num = kdq_table(rotation_matrix(th, n), qubit_state(prm), build_hamiltonian(1, e));
    CHECK(max_abs_diff(kdq_rotation_analytic(th, n, prm, e).entries, num.entries) <= 1e-14);
  }
  CHECK_THROWS_AS(kdq_rotation_analytic(1.0, {0, 0, 2}, {0.5, 0, 0}), InvalidArgument);
}

TEST_CASE("Hadamard-like evolution") {
  const QubitStateParams prm{0.5, 0.5, kPi / 2};
  const auto h = build_hamiltonian(1, 1.0);
  // omega t = pi/4: Re q_{down,up} = (1 - sqrt2)/8
  const auto t = kdq_hadamard_evolution(kPi / 4, prm);
  CHECK(std::abs(t(0, 1).real() - (1 - kSqrt2) / 8) <= 1e-14);
  const double s = 1 / kSqrt2;
  const auto num = kdq_table(rotation_matrix(kPi / 2, {s, 0, s}), qubit_state(prm), h);
  CHECK(max_abs_diff(t.entries, num.entries) <= 1e-14);
  // omega t = pi/2 is the Hadamard up to a phase
  Rng rng(39);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_qubit_params(rng);
    CHECK(max_abs_diff(kdq_hadamard_evolution(kPi / 2, p).entries,
                       kdq_table(hadamard(), qubit_state(p), h).entries) <= 1e-14);
  }
}

TEST_CASE("global phase and state linearity") {
  Rng rng(40);
  const auto h = build_hamiltonian(2, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix u = random_unitary(rng, 4);
    const auto a = random_state(rng, 4), b = random_state(rng, 4);
    const double w = rng.uniform();
    const auto mix = DensityMatrix(w * a.matrix() + (1 - w) * b.matrix());
    const CMatrix expected = w * kdq_table(u, a, h).entries + (1 - w) * kdq_table(u, b, h).entries;
    CHECK(max_abs_diff(kdq_table(u, mix, h).entries, expected) <= 1e-14);
    const CMatrix up = std::exp(kI * rng.uniform(0, 6)) * u;
    CHECK(max_abs_diff(kdq_table(up, a, h).entries, kdq_table(u, a, h).entries) <= 1e-14);
  }
}

TEST_CASE("argument validation") {
  const auto h = build_hamiltonian(1, 1.0);
  const auto rho = qubit_state({0.5, 0, 0});
  CHECK_THROWS_AS(kdq_table(CMatrix::identity(4), rho, h), InvalidArgument);
  CHECK_THROWS_AS(kdq_table(CMatrix{{1, 1}, {0, 1}}, rho, h), ValidationError);
  CHECK_THROWS_AS(kdq_table(hadamard(), product_state(rho, rho), h), InvalidArgument);
}
