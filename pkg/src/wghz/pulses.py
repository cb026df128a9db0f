"""Time-evolution operators for the control - interaction - control sequence.

The sequence consists of an instantaneous global rotation (angle 2*alpha1
about the in-plane axis at polar angle phi1), an Ising pulse of dimensionless
duration xi = J*T, and a second instantaneous rotation (2*alpha2 about the
axis at phi2).  Both the full 8-dimensional operators and their 4x4
symmetric-sector representations are provided; the 8x8 path exists mainly as
an independent oracle for the 4x4 one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .linalg import kron
from .operators import PAULI, ising_hamiltonian

__all__ = [
    "PulseParams",
    "Direction",
    "u_zz",
    "u_zz_full",
    "axis_operator",
    "s_matrices",
    "u_c",
    "u_c_full",
    "sequence_unitary",
    "sequence_unitary_full",
]

_SQRT3 = np.sqrt(3.0)
_HZZ_DIAG = np.real(np.diag(ising_hamiltonian())).copy()
_SECTOR_HZZ_DIAG = np.array([3.0, -1.0, -1.0, 3.0])


@dataclass(frozen=True)
class PulseParams:
    """The five sequence parameters.

    xi is the dimensionless Ising-pulse duration (J*T, must be >= 0); the
    alphas are the global-rotation half-angles and the phis the polar angles
    of the rotation axes, all in radians.  Stored values are unconstrained
    reals apart from xi >= 0; use `reduced` for canonical mod-2pi display.
    """

    xi: float
    alpha1: float
    phi1: float
    alpha2: float
    phi2: float

    def __post_init__(self):
        if self.xi < 0:
            raise ValueError(f"pulse duration must be non-negative, got xi={self.xi}")

    def as_array(self) -> np.ndarray:
        return np.array([self.xi, self.alpha1, self.phi1, self.alpha2, self.phi2])

    def reduced(self) -> "PulseParams":
        """Copy with all angle parameters reduced to [0, 2 pi)."""
        two_pi = 2 * np.pi
        return PulseParams(
            xi=self.xi,
            alpha1=self.alpha1 % two_pi,
            phi1=self.phi1 % two_pi,
            alpha2=self.alpha2 % two_pi,
            phi2=self.phi2 % two_pi,
        )


class Direction(enum.Enum):
    """Which conversion the sequence implements.

    W_TO_GHZ applies the (alpha1, phi1) pulse first; GHZ_TO_W starts from a
    GHZ state and applies the (alpha2, phi2) pulse first.
    """

    W_TO_GHZ = "w2ghz"
    GHZ_TO_W = "ghz2w"

    @classmethod
    def from_label(cls, label: str) -> "Direction":
        for d in cls:
            if d.value == label:
                return d
        raise ValueError(f"unknown direction {label!r} (expected 'w2ghz' or 'ghz2w')")

    @property
    def label(self) -> str:
        return self.value


def u_zz(xi: float) -> np.ndarray:
    """Ising-pulse unitary in the sector basis: diag over the ZZ spectrum.

    diag(e^{-3 i xi}, e^{i xi}, e^{i xi}, e^{-3 i xi}).
    """
    return np.diag(np.exp(-1j * xi * _SECTOR_HZZ_DIAG))


def u_zz_full(xi: float) -> np.ndarray:
    """Ising-pulse unitary on the full 8-dimensional space."""
    return np.diag(np.exp(-1j * xi * _HZZ_DIAG))


def axis_operator(phi: float) -> np.ndarray:
    """Single-qubit in-plane axis operator cos(phi) X + sin(phi) Y."""
    return np.cos(phi) * PAULI["X"] + np.sin(phi) * PAULI["Y"]


def s_matrices(phi: float):
    """Sector representations of the elementary symmetric sums of the
    per-qubit axis operators: the sum, the pairwise products, and the triple
    product.  These are the building blocks of the compressed control pulse.
    """
    e1 = np.exp(1j * phi)
    c1 = np.conj(e1)
    e2, c2 = e1 * e1, c1 * c1
    e3, c3 = e2 * e1, c2 * c1
    r3 = _SQRT3
    s1 = np.array([
        [0.0, r3 * c1, 0.0, 0.0],
        [r3 * e1, 0.0, 2.0 * c1, 0.0],
        [0.0, 2.0 * e1, 0.0, r3 * c1],
        [0.0, 0.0, r3 * e1, 0.0],
    ], dtype=complex)
    s2 = np.array([
        [0.0, 0.0, r3 * c2, 0.0],
        [0.0, 2.0, 0.0, r3 * c2],
        [r3 * e2, 0.0, 2.0, 0.0],
        [0.0, r3 * e2, 0.0, 0.0],
    ], dtype=complex)
    s3 = np.array([
        [0.0, 0.0, 0.0, c3],
        [0.0, 0.0, c1, 0.0],
        [0.0, e1, 0.0, 0.0],
        [e3, 0.0, 0.0, 0.0],
    ], dtype=complex)
    return s1, s2, s3


def u_c(alpha: float, phi: float) -> np.ndarray:
    """Instantaneous global-rotation unitary in the 4x4 sector basis.

    Materialized numerically as the cubic polynomial
    cos^3(a) I - i sin(a) cos^2(a) S1 - sin^2(a) cos(a) S2 + i sin^3(a) S3
    in the symmetric sums returned by `s_matrices`.
    """
    s1, s2, s3 = s_matrices(phi)
    c, s = np.cos(alpha), np.sin(alpha)
    return (c**3) * np.eye(4) - 1j * (s * c * c) * s1 - (s * s * c) * s2 + 1j * (s**3) * s3


def u_c_full(alpha: float, phi: float) -> np.ndarray:
    """Global-rotation unitary on the full space: three identical single-qubit
    rotations by angle 2*alpha about the axis (cos phi, sin phi, 0)."""
    a = axis_operator(phi)
    r = np.cos(alpha) * np.eye(2) - 1j * np.sin(alpha) * a
    return kron(r, r, r)


def sequence_unitary(params: PulseParams, direction: Direction = Direction.W_TO_GHZ) -> np.ndarray:
    """4x4 sector unitary of the whole pulse sequence.

    For W_TO_GHZ the factor order is U_C(alpha2, phi2) U_ZZ(xi)
    U_C(alpha1, phi1); for GHZ_TO_W the two control pulses swap roles.
    """
    first, second = _pulse_order(params, direction)
    return u_c(*second) @ (u_zz(params.xi) @ u_c(*first))


def sequence_unitary_full(params: PulseParams, direction: Direction = Direction.W_TO_GHZ) -> np.ndarray:
    """8x8 composition of the same sequence (oracle for the sector path)."""
    first, second = _pulse_order(params, direction)
    return u_c_full(*second) @ (u_zz_full(params.xi) @ u_c_full(*first))


def _pulse_order(params: PulseParams, direction: Direction):
    if direction is Direction.W_TO_GHZ:
        return (params.alpha1, params.phi1), (params.alpha2, params.phi2)
    return (params.alpha2, params.phi2), (params.alpha1, params.phi1)


def _u_c_scalar(alpha: float, phi: float) -> np.ndarray:
    """Preallocated-fill variant of `u_c` for optimizer hot loops.

    Entry-for-entry identical to the polynomial composition in `u_c`;
    pinned to it by tests.
    """
    c, s = np.cos(alpha), np.sin(alpha)
    w0 = c**3
    w1 = -1j * s * c * c
    w2 = -(s * s * c)
    w3 = 1j * s**3
    e1 = np.exp(1j * phi)
    c1 = e1.conjugate()
    e2, c2 = e1 * e1, c1 * c1
    r3 = _SQRT3
    out = np.empty((4, 4), dtype=complex)
    diag_mid = w0 + 2.0 * w2
    out[0, 0] = w0
    out[0, 1] = w1 * r3 * c1
    out[0, 2] = w2 * r3 * c2
    out[0, 3] = w3 * c2 * c1
    out[1, 0] = w1 * r3 * e1
    out[1, 1] = diag_mid
    out[1, 2] = (2.0 * w1 + w3) * c1
    out[1, 3] = w2 * r3 * c2
    out[2, 0] = w2 * r3 * e2
    out[2, 1] = (2.0 * w1 + w3) * e1
    out[2, 2] = diag_mid
    out[2, 3] = w1 * r3 * c1
    out[3, 0] = w3 * e2 * e1
    out[3, 1] = w2 * r3 * e2
    out[3, 2] = w1 * r3 * e1
    out[3, 3] = w0
    return out


def _u_c_batch(alpha: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Vectorized u_c over broadcastable arrays of (alpha, phi).

    Returns an array of shape broadcast(alpha, phi).shape + (4, 4).  Used by
    the robustness sweeps; agrees with `u_c` entry-for-entry.
    """
    alpha, phi = np.broadcast_arrays(np.asarray(alpha, float), np.asarray(phi, float))
    c, s = np.cos(alpha), np.sin(alpha)
    w0 = c**3
    w1 = -1j * s * c * c
    w2 = -(s * s * c)
    w3 = 1j * s**3
    e1 = np.exp(1j * phi)
    c1 = np.conj(e1)
    e2, c2 = e1 * e1, c1 * c1
    e3, c3 = e2 * e1, c2 * c1
    r3 = _SQRT3
    out = np.zeros(alpha.shape + (4, 4), dtype=complex)
    out[..., 0, 0] = w0
    out[..., 1, 1] = w0 + 2.0 * w2
    out[..., 2, 2] = w0 + 2.0 * w2
    out[..., 3, 3] = w0
    out[..., 0, 1] = w1 * r3 * c1
    out[..., 1, 0] = w1 * r3 * e1
    out[..., 1, 2] = w1 * 2.0 * c1 + w3 * c1
    out[..., 2, 1] = w1 * 2.0 * e1 + w3 * e1
    out[..., 2, 3] = w1 * r3 * c1
    out[..., 3, 2] = w1 * r3 * e1
    out[..., 0, 2] = w2 * r3 * c2
    out[..., 2, 0] = w2 * r3 * e2
    out[..., 1, 3] = w2 * r3 * c2
    out[..., 3, 1] = w2 * r3 * e2
    out[..., 0, 3] = w3 * c3
    out[..., 3, 0] = w3 * e3
    return out
