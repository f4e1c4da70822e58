#include "support.hpp"

#include "kdwork/error.hpp"
#include "kdwork/gates.hpp"

#include <doctest.h>

#include <algorithm>

using namespace kdwork;

TEST_CASE("mat_mul agrees with a triple loop") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(rng.integer(1, 8));
    const auto k = static_cast<std::size_t>(rng.integer(1, 8));
    const auto c = static_cast<std::size_t>(rng.integer(1, 8));
    const CMatrix a = kdtest::random_matrix(rng, r, k);
    const CMatrix b = kdtest::random_matrix(rng, k, c);
    CHECK(max_abs_diff(mat_mul(a, b), kdtest::naive_mul(a, b)) <= 1e-13);
  }
}

TEST_CASE("mat_mul rejects mismatched shapes and names them") {
  const CMatrix a(2, 3), b(2, 2);
  CHECK_THROWS_AS(mat_mul(a, b), InvalidArgument);
  try {
    mat_mul(a, b);
  } catch (const InvalidArgument &e) {
    const std::string msg = e.what();
    CHECK(msg.find("2x3") != std::string::npos);
    CHECK(msg.find("2x2") != std::string::npos);
  }
}

TEST_CASE("kron layout: left factor is the slow index") {
  const CMatrix a{{1, 2}, {3, 4}};
  const CMatrix b{{0, 5}, {6, 7}};
  const CMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == complex_t(5));
  CHECK(k(1, 0) == complex_t(6));
  CHECK(k(0, 3) == complex_t(10));
  CHECK(k(3, 2) == complex_t(24));
  CHECK(k(2, 1) == complex_t(15));
}

TEST_CASE("kron mixed product property") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix a = kdtest::random_matrix(rng, 2, 2), b = kdtest::random_matrix(rng, 4, 4);
    const CMatrix c = kdtest::random_matrix(rng, 2, 2), d = kdtest::random_matrix(rng, 4, 4);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-11);
  }
}

TEST_CASE("adjoint, trace, commutators") {
  const CMatrix a{{1, complex_t(0, 2)}, {3, 4}};
  const CMatrix ad = adjoint(a);
  CHECK(ad(0, 1) == complex_t(3));
  CHECK(ad(1, 0) == complex_t(0, -2));
  CHECK(trace(a) == complex_t(5));
  CHECK_THROWS_AS(trace(CMatrix(2, 3)), InvalidArgument);

  // [X, Z] = -2iY with Y = [[0, i], [-i, 0]] in this basis
  const CMatrix xz = commutator(pauli_x(), pauli_z());
  CHECK(max_abs_diff(xz, complex_t(0, -2) * pauli_y()) <= 1e-15);
  // {X, Z} = 0
  CHECK(max_abs(anticommutator(pauli_x(), pauli_z())) == 0.0);
}

TEST_CASE("norms") {
  const CMatrix a{{3, 0}, {0, complex_t(0, 4)}};
  CHECK(frobenius_norm(a) == doctest::Approx(5.0));
  CHECK(max_abs(a) == doctest::Approx(4.0));
  CHECK_THROWS_AS(max_abs_diff(a, CMatrix(3, 3)), InvalidArgument);
}

TEST_CASE("non-finite entries are rejected") {
  CHECK_THROWS_AS(CMatrix(1, 1, {complex_t(std::nan(""), 0)}), InvalidArgument);
  CHECK_THROWS_AS(CMatrix(1, 2, {complex_t(1, 0)}), InvalidArgument);
}

TEST_CASE("unitary, hermitian and psd predicates") {
  CHECK(is_unitary(hadamard(), 1e-14));
  CHECK_FALSE(is_unitary(CMatrix{{1, 1}, {0, 1}}, 1e-10));
  CHECK(is_hermitian(pauli_y(), 0.0));
  CHECK_FALSE(is_hermitian(CMatrix{{0, 1}, {0, 0}}, 1e-10));
  CHECK(is_psd(CMatrix{{0.5, 0.5}, {0.5, 0.5}}, 1e-12));
  CHECK_FALSE(is_psd(CMatrix{{0.5, 0.6}, {0.6, 0.5}}, 1e-12));
  CHECK_FALSE(is_psd(CMatrix{{0, 1}, {0, 0}}, 1e-12));
}

TEST_CASE("hermitian eigenvalues: known spectra") {
  auto ev = hermitian_eigenvalues(pauli_y());
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-14));

  // Hamiltonian of three qubits with E = 1
  const auto h3 = build_hamiltonian(3, 1.0);
  ev = hermitian_eigenvalues(h3.matrix());
  const std::vector<double> expected{-3, -1, -1, -1, 1, 1, 1, 3};
  REQUIRE(ev.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(ev[k] - expected[k]) <= 1e-13);
}

TEST_CASE("hermitian eigenvalues: trace and Frobenius invariants on random input") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = static_cast<std::size_t>(rng.integer(1, 8));
    const CMatrix g = kdtest::random_matrix(rng, d, d);
    const CMatrix a = g + adjoint(g);
    const auto ev = hermitian_eigenvalues(a);
    REQUIRE(ev.size() == d);
    CHECK(std::is_sorted(ev.begin(), ev.end()));
    double s = 0, s2 = 0;
    for (double x : ev) {
      s += x;
      s2 += x * x;
    }
    CHECK(std::abs(s - trace(a).real()) <= 1e-10);
    const double f = frobenius_norm(a);
    CHECK(std::abs(s2 - f * f) <= 1e-9 * std::max(1.0, f * f));
  }
}
