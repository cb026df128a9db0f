"""Drift Hamiltonian, collective controls, single-site Paulis and target states.

Conventions: hbar = 1, Ising coupling J = 1 by default (durations are then in
units of 1/J).  Qubit 1 is the leftmost tensor factor, i.e. the most
significant bit of the computational-basis index.
"""

from __future__ import annotations

import numpy as np

from .linalg import kron

__all__ = [
    "PAULI",
    "pauli",
    "pauli_at",
    "ising_hamiltonian",
    "collective",
    "basis_state",
    "w_state",
    "ghz_state",
]

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli(kind: str) -> np.ndarray:
    """Single-qubit Pauli matrix (a copy), kind in {I, X, Y, Z}."""
    try:
        return PAULI[kind].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli kind {kind!r}") from None


def pauli_at(kind: str, site: int, n_qubits: int = 3) -> np.ndarray:
    """Pauli operator acting on one site of an n-qubit register.

    Parameters
    ----------
    kind : str
        One of "X", "Y", "Z" (or "I").
    site : int
        1-based site index; site 1 is the leftmost tensor factor.
    n_qubits : int
        Register size.

    Returns
    -------
    ndarray
        2**n_qubits dimensional operator, identity on every other factor.
    """
    if not 1 <= site <= n_qubits:
        raise ValueError(f"site {site} out of range 1..{n_qubits}")
    factors = [PAULI["I"]] * n_qubits
    factors[site - 1] = pauli(kind)
    return kron(*factors)


def ising_hamiltonian(n_qubits: int = 3, j: float = 1.0) -> np.ndarray:
    """All-to-all Ising (ZZ) drift Hamiltonian J * sum_{n<n'} Z_n Z_n'.

    Diagonal in the computational basis.  Requires n_qubits >= 2.
    """
    if n_qubits < 2:
        raise ValueError("Ising terms need at least two qubits")
    if j <= 0:
        raise ValueError("coupling strength must be positive")
    dim = 2**n_qubits
    h = np.zeros((dim, dim), dtype=complex)
    for a in range(1, n_qubits + 1):
        for b in range(a + 1, n_qubits + 1):
            h += pauli_at("Z", a, n_qubits) @ pauli_at("Z", b, n_qubits)
    return j * h


def collective(kind: str, n_qubits: int = 3) -> np.ndarray:
    """Collective (global) control operator: sum of X_n or Y_n over all sites."""
    if kind not in ("X", "Y"):
        raise ValueError("collective control kind must be 'X' or 'Y'")
    dim = 2**n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for site in range(1, n_qubits + 1):
        out += pauli_at(kind, site, n_qubits)
    return out


def basis_state(bits: str) -> np.ndarray:
    """Computational basis state from a bit string, e.g. "100"."""
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"not a bit string: {bits!r}")
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def w_state() -> np.ndarray:
    """Three-qubit W state (|100> + |010> + |001>) / sqrt(3)."""
    return (basis_state("100") + basis_state("010") + basis_state("001")) / np.sqrt(3)


def ghz_state(phi: float = 0.0) -> np.ndarray:
    """Three-qubit GHZ state (|000> + e^{i phi} |111>) / sqrt(2).

    The phase is reduced mod 2 pi; any real value is accepted.
    """
    phi = float(phi) % (2 * np.pi)
    return (basis_state("000") + np.exp(1j * phi) * basis_state("111")) / np.sqrt(2)
