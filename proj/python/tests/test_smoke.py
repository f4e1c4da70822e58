import math

import numpy as np
import pytest

import kdwork

H = np.array([[-1.0, 1.0], [1.0, 1.0]]) / math.sqrt(2.0)
HTH = """qubits 1
state pure_bloch pi/2 pi/2
gate H 0
gate T 0
gate H 0
"""


def naive_kdq(u, rho):
    d = u.shape[0]
    q = np.zeros((d, d), dtype=complex)
    for i in range(d):
        for f in range(d):
            q[i, f] = u[f, i] * np.sum(rho[i, :] * np.conj(u[f, :]))
    return q


def random_unitary(rng, d):
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_hadamard_worked_case():
    q = kdwork.kdq(H, kdwork.qubit_state(0.5, 0.5, math.pi))
    assert np.allclose(q, [[0.5, 0.0], [0.5, 0.0]], atol=1e-14)
    assert kdwork.work(H, kdwork.qubit_state(0.5, 0.5, math.pi))["total"] == pytest.approx(1.0, abs=1e-14)


def test_kdq_against_numpy():
    rng = np.random.default_rng(3)
    for _ in range(20):
        u = random_unitary(rng, 4)
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ g.conj().T
        rho /= np.trace(rho)
        q = kdwork.kdq(u, rho)
        assert np.allclose(q, naive_kdq(u, rho), atol=1e-13)
        assert np.allclose(q.sum(axis=1), np.diag(rho), atol=1e-13)


def test_parse_and_decompose():
    info = kdwork.parse_circuit(HTH)
    assert info["gates"] == ["H", "T", "H"]
    d = kdwork.decompose(HTH, screen=True)
    assert d["full"]["entries"][0][1]["re"] == pytest.approx((1 - math.sqrt(2)) / 4, abs=1e-12)
    assert not any(c["satisfied"] for c in d["commutation"]["conditions"])


def test_errors():
    with pytest.raises(kdwork.ParseError, match="line 3"):
        kdwork.parse_circuit("qubits 2\nstate thermal 1\ngate CNOT 0 0\n")
    with pytest.raises(kdwork.ValidationError):
        kdwork.parse_circuit("qubits 1\nstate qubit 0.5 0.9 0\n")
    with pytest.raises(ValueError):
        kdwork.kdq(np.eye(4), kdwork.qubit_state(0.5, 0.0, 0.0))


def test_jarzynski_gibbs():
    beta = 0.7
    p = math.exp(-beta) / (math.exp(-beta) + math.exp(beta))
    expectation, gamma = kdwork.jarzynski(H, kdwork.qubit_state(p, 0.0, 0.0), beta)
    assert abs(expectation - 1) < 1e-12
    assert abs(gamma) < 1e-15


def test_sweep_and_figure():
    tmpl = HTH.replace("pi/2 pi/2", "$theta $phi")
    header, rows = kdwork.sweep(tmpl, [("phi", [0.0, math.pi])], ["work"], {"theta": 1.0})
    assert header == ["phi", "work"]
    assert len(rows) == 2
    header, rows = kdwork.figure("2b")
    assert "re_q_0_1" in header and len(rows) == 6 * 181


def test_verify_quick():
    ok, checks = kdwork.verify(20)
    assert ok
    assert all(c["passed"] for c in checks)
