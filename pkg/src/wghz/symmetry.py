"""Permutation-symmetry machinery for the three-qubit register.

Provides the qubit-permutation operators, the symmetrizer (group average of
permutation conjugations), the symmetry-adapted sector basis zeta_0..zeta_3
(ordered by Hamming weight) with its 4x8 projector, compression of 8x8
operators to the 4x4 sector representation, and two Lie-algebraic checks:
the dimension of the permutation-invariant operator algebra and the
commutator closure of the drift/control generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations

import numpy as np

from .linalg import span_dimension
from .operators import basis_state, collective, ising_hamiltonian, pauli

__all__ = [
    "all_permutations",
    "permutation_operator",
    "symmetrize",
    "SectorBasis",
    "sector_basis",
    "compress",
    "permutation_invariant_algebra_dimension",
    "sector_decomposition_dims",
    "dynamical_lie_dimension",
    "LieClosureError",
]

N_QUBITS = 3
DIM = 2**N_QUBITS


def all_permutations() -> list[tuple[int, ...]]:
    """The six permutations of {1, 2, 3}, in lexicographic order."""
    return [tuple(p) for p in _permutations((1, 2, 3))]


def permutation_operator(sigma) -> np.ndarray:
    """8x8 operator permuting the tensor factors.

    `sigma` is a bijection of {1, 2, 3} given as a sequence: the qubit at
    position j is sent to position sigma[j-1].  Entries are real 0/1 and the
    operator is unitary.
    """
    sigma = tuple(sigma)
    if sorted(sigma) != [1, 2, 3]:
        raise ValueError(f"not a permutation of (1, 2, 3): {sigma!r}")
    op = np.zeros((DIM, DIM), dtype=complex)
    for idx in range(DIM):
        bits = [(idx >> (N_QUBITS - 1 - q)) & 1 for q in range(N_QUBITS)]
        moved = [0] * N_QUBITS
        for j in range(N_QUBITS):
            moved[sigma[j] - 1] = bits[j]
        jdx = sum(b << (N_QUBITS - 1 - q) for q, b in enumerate(moved))
        op[jdx, idx] = 1.0
    return op


def symmetrize(m: np.ndarray) -> np.ndarray:
    """Group average (1/6) sum_P P m P† over all qubit permutations.

    The output commutes with every permutation operator and the map is
    idempotent.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (DIM, DIM):
        raise ValueError(f"expected an {DIM}x{DIM} matrix, got {m.shape}")
    acc = np.zeros_like(m)
    for sigma in all_permutations():
        p = permutation_operator(sigma)
        acc += p @ m @ p.conj().T
    return acc / 6.0


@dataclass(frozen=True)
class SectorBasis:
    """Symmetry-adapted basis of the permutation-symmetric sector.

    `vectors` holds zeta_0..zeta_3 in Hamming-weight order; `projector` is
    the 4x8 map whose rows are the conjugated basis vectors, so that
    projector @ projector† = I_4.
    """

    vectors: tuple[np.ndarray, ...]
    projector: np.ndarray


def sector_basis() -> SectorBasis:
    """Construct the zeta basis and its 4x8 projector."""
    zeta0 = basis_state("000")
    zeta1 = (basis_state("100") + basis_state("010") + basis_state("001")) / np.sqrt(3)
    zeta2 = (basis_state("110") + basis_state("101") + basis_state("011")) / np.sqrt(3)
    zeta3 = basis_state("111")
    vecs = (zeta0, zeta1, zeta2, zeta3)
    projector = np.vstack([v.conj() for v in vecs])
    return SectorBasis(vectors=vecs, projector=projector)


_SECTOR = sector_basis()


def compress(m: np.ndarray, basis: SectorBasis | None = None) -> np.ndarray:
    """Compress an 8x8 operator to its 4x4 symmetric-sector representation.

    Returns projector @ m @ projector†.  For operators that commute with all
    qubit permutations this is an algebra homomorphism (products map to
    products).
    """
    b = basis if basis is not None else _SECTOR
    m = np.asarray(m, dtype=complex)
    return b.projector @ m @ b.projector.conj().T


def permutation_invariant_algebra_dimension(tol: float = 1e-9) -> int:
    """Real dimension of the algebra of permutation-invariant operators.

    Spanned by i times the symmetrized Pauli strings over all 4**3 choices
    of single-qubit factors; evaluates to 20 for three qubits.
    """
    strings = []
    kinds = ("I", "X", "Y", "Z")
    for a in kinds:
        for b in kinds:
            for c in kinds:
                m = np.kron(np.kron(pauli(a), pauli(b)), pauli(c))
                strings.append(1j * symmetrize(m))
    return span_dimension(strings, tol=tol)


def sector_decomposition_dims(seed: int = 0, tol: float = 1e-8) -> list[int]:
    """Dimensions of the invariant subspaces under the drift and controls.

    Block-diagonalizes {H_ZZ, collective X, collective Y} simultaneously by
    sampling a random Hermitian element of their commutant and grouping its
    eigenspaces; each eigenvalue cluster spans a common invariant subspace.
    The invariance of every block is verified before returning.

    Returns
    -------
    list of int
        Subspace dimensions sorted in decreasing order, [4, 2, 2].
    """
    gens = [ising_hamiltonian(), collective("X"), collective("Y")]

    # commutant of the generators: null space of M -> [M, A] stacked over A
    eye = np.eye(DIM)
    rows = [np.kron(eye, a) - np.kron(a.T, eye) for a in gens]
    stacked = np.vstack(rows)
    _, svals, vh = np.linalg.svd(stacked)
    null_count = int(np.sum(svals <= 1e-10 * svals[0]))
    null_vectors = vh[stacked.shape[1] - null_count:].conj().T

    # a generic Hermitian commutant element separates the invariant blocks;
    # resample if a spurious eigenvalue near-degeneracy blurs the clustering
    for attempt in range(3):
        rng = np.random.default_rng(seed + attempt)
        coeffs = rng.normal(size=null_vectors.shape[1]) \
            + 1j * rng.normal(size=null_vectors.shape[1])
        sample = (null_vectors @ coeffs).reshape(DIM, DIM, order="F")
        sample = sample + sample.conj().T   # commutant is *-closed
        sample /= np.linalg.norm(sample)

        evals, evecs = np.linalg.eigh(sample)
        blocks = [[0]]
        for k in range(1, DIM):
            if evals[k] - evals[k - 1] < 1e-6:
                blocks[-1].append(k)
            else:
                blocks.append([k])
        gaps = [evals[idx[0]] - evals[prev[-1]]
                for prev, idx in zip(blocks, blocks[1:])]
        if not gaps or min(gaps) > 1e-4:
            break

    dims = []
    for idx in blocks:
        v = evecs[:, idx]
        comp = np.eye(DIM) - v @ v.conj().T
        for a in gens:
            leak = np.linalg.norm(comp @ a @ v)
            if leak > tol:
                raise RuntimeError(f"candidate block is not invariant (leakage {leak:.3e})")
        dims.append(len(idx))
    return sorted(dims, reverse=True)


class LieClosureError(RuntimeError):
    """Commutator closure did not stabilize within the allowed depth."""

    def __init__(self, depth: int, dimension: int):
        super().__init__(
            f"Lie closure still growing after depth {depth} (dimension {dimension})"
        )
        self.depth = depth
        self.dimension = dimension


def dynamical_lie_dimension(generators, max_depth: int = 10, tol: float = 1e-9) -> int:
    """Real dimension of the smallest commutator-closed span of the generators.

    Parameters
    ----------
    generators : sequence of ndarray
        Skew-Hermitian matrices (multiply Hermitian generators by i first).
    max_depth : int
        Maximum number of closure iterations; each iteration commutes all
        current basis elements against all generators.
    tol : float
        Acceptance threshold for a new direction after projection onto the
        current orthonormal basis (inputs are normalized, so this is an
        absolute residual threshold).

    Raises
    ------
    ValueError
        If a generator is not skew-Hermitian.
    LieClosureError
        If the span is still growing after `max_depth` iterations.
    """
    gens = [np.asarray(g, dtype=complex) for g in generators]
    for g in gens:
        defect = np.linalg.norm(g + g.conj().T)
        if defect > 1e-12 * max(1.0, np.linalg.norm(g)):
            raise ValueError("generators must be skew-Hermitian (i times Hermitian)")

    basis: list[np.ndarray] = []

    def try_add(candidate: np.ndarray) -> bool:
        v = candidate.copy()
        for _ in range(2):
            for b in basis:
                v = v - np.real(np.vdot(b, v)) * b
        norm = np.linalg.norm(v)
        if norm > tol:
            basis.append(v / norm)
            return True
        return False

    normalized_gens = []
    for g in gens:
        n = np.linalg.norm(g)
        if n > 0:
            normalized_gens.append(g / n)
            try_add(g / n)

    for _ in range(max_depth):
        added = 0
        snapshot = list(basis)
        for b in snapshot:
            for g in normalized_gens:
                added += try_add(g @ b - b @ g)
        if added == 0:
            return len(basis)
    raise LieClosureError(max_depth, len(basis))
