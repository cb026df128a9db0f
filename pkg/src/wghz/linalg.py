"""Dense complex linear algebra for small (at most 8x8) operators.

Everything here works on plain ``numpy.ndarray`` values with complex dtype.
Matrix exponentials go through a Hermitian eigendecomposition rather than a
series or scaling-and-squaring scheme: at these sizes exactness and unitarity
matter more than speed.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "kron",
    "dagger",
    "frobenius_inner",
    "is_hermitian",
    "is_unitary",
    "herm_expm",
    "span_dimension",
]

#: Default tolerance for the unitary / Hermitian predicates (Frobenius norm).
DEFAULT_ATOL = 1e-12


def kron(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, left to right."""
    if not factors:
        raise ValueError("kron needs at least one factor")
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def frobenius_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Frobenius inner product tr(a† b)."""
    return complex(np.vdot(a, b))


def is_hermitian(m: np.ndarray, atol: float = DEFAULT_ATOL) -> bool:
    m = np.asarray(m)
    return bool(np.linalg.norm(m - m.conj().T) <= atol)


def is_unitary(m: np.ndarray, atol: float = DEFAULT_ATOL) -> bool:
    m = np.asarray(m)
    eye = np.eye(m.shape[0])
    return bool(np.linalg.norm(m.conj().T @ m - eye) <= atol)


def herm_expm(h: np.ndarray, scale: float = 1.0, atol: float = DEFAULT_ATOL) -> np.ndarray:
    """Unitary exponential exp(-i * scale * h) of a Hermitian matrix.

    Parameters
    ----------
    h : ndarray
        Hermitian matrix (checked against `atol` in Frobenius norm).
    scale : float
        Real prefactor multiplying `h` in the exponent.

    Returns
    -------
    ndarray
        exp(-i * scale * h), unitary to better than 1e-12.

    Raises
    ------
    ValueError
        If `h` is not Hermitian within `atol`.
    """
    h = np.asarray(h, dtype=complex)
    defect = np.linalg.norm(h - h.conj().T)
    if defect > atol:
        raise ValueError(f"matrix is not Hermitian: ||h - h^dag||_F = {defect:.3e} > {atol:.1e}")
    evals, vecs = np.linalg.eigh((h + h.conj().T) / 2.0)
    phases = np.exp(-1j * scale * evals)
    return (vecs * phases) @ vecs.conj().T


def span_dimension(ops, tol: float = 1e-9) -> int:
    """Dimension of the real span of a family of matrices.

    The matrices are treated as vectors under the real Frobenius inner
    product Re tr(a† b), so a Hermitian matrix and i times it count as two
    directions.  Rank is computed by modified Gram-Schmidt with a threshold
    relative to the largest norm in the set; commutator-generated elements
    shrink in norm, which is why the threshold cannot be absolute.

    Parameters
    ----------
    ops : sequence of ndarray
        Matrices of a common shape.
    tol : float
        Relative rank threshold.

    Raises
    ------
    ValueError
        If the matrices do not share a common shape, or the list is empty.
    """
    mats = [np.asarray(m, dtype=complex) for m in ops]
    if not mats:
        raise ValueError("span_dimension needs at least one matrix")
    shape = mats[0].shape
    for m in mats:
        if m.shape != shape:
            raise ValueError(f"dimension mismatch: {m.shape} vs {shape}")
    scale = max(np.linalg.norm(m) for m in mats)
    if scale == 0.0:
        return 0
    threshold = tol * scale
    basis: list[np.ndarray] = []
    for m in mats:
        v = m.copy()
        # two Gram-Schmidt passes for numerical robustness
        for _ in range(2):
            for b in basis:
                v = v - np.real(np.vdot(b, v)) * b
        norm = np.linalg.norm(v)
        if norm > threshold:
            basis.append(v / norm)
    return len(basis)
