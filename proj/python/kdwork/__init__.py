"""Kirkwood-Dirac quasiprobability work statistics for qubit circuits."""

from ._kdwork import (
    ParseError,
    ValidationError,
    decompose,
    figure,
    figure_ids,
    hamiltonian_eigenvalues,
    jarzynski,
    kdq,
    parse_circuit,
    pure_state_bloch,
    qubit_state,
    sweep,
    verify,
    work,
)

__all__ = [
    "ParseError",
    "ValidationError",
    "decompose",
    "figure",
    "figure_ids",
    "hamiltonian_eigenvalues",
    "jarzynski",
    "kdq",
    "parse_circuit",
    "pure_state_bloch",
    "qubit_state",
    "sweep",
    "verify",
    "work",
]
