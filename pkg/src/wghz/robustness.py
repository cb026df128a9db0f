"""Systematic-error analysis of the conversion pulse sequence.

Errors follow the perturbation rule

    xi     -> xi0 * (1 + eps_xi)          (relative)
    alpha_j -> alpha_j0 * (1 + eps_alpha_j)  (relative)
    phi_j  -> phi_j0 + eps_phi_j          (absolute, radians)

applied to a branch optimum as baseline.  For each single parameter the
fidelity admits a closed form, independent of the GHZ phase and of the
branch choice; sweeps over 1 to 3 simultaneous error axes always use direct
sequence simulation as ground truth, with the closed forms treated as
formulas under test.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .convert import (
    OPTIMAL_ALPHA1,
    OPTIMAL_XI,
    _fidelity_batch,
    ghz_fidelity,
    optimal_params,
)
from .pulses import Direction, PulseParams, sequence_unitary

__all__ = [
    "C_PLUS",
    "C_MINUS",
    "W_PHASE",
    "ERROR_PARAMS",
    "SWEEP_AXES",
    "ErrorSpec",
    "closed_form_error_fidelity",
    "direct_error_fidelity",
    "quadratic_coefficient",
    "SweepResult",
    "sweep",
    "joint_quadratic_form",
    "arbitrary_phi_fidelity",
]

_SQRT2 = np.sqrt(2.0)
_SQRT3 = np.sqrt(3.0)

#: Constants of the second-axis-error closed form.  C_PLUS/C_MINUS equal
#: cos(OPTIMAL_XI)/sin(OPTIMAL_XI) and W_PHASE equals exp(4j * OPTIMAL_XI).
C_PLUS = float(np.sqrt((_SQRT3 + _SQRT2) / (2.0 * _SQRT3)))
C_MINUS = float(np.sqrt((_SQRT3 - _SQRT2) / (2.0 * _SQRT3)))
W_PHASE = complex((1.0 + 2.0 * _SQRT2 * 1j) / 3.0)

ERROR_PARAMS = ("xi", "alpha1", "phi1", "alpha2", "phi2")
#: Axis names accepted by `sweep`; the tied axes apply one error value to
#: both pulses at once.
SWEEP_AXES = ERROR_PARAMS + ("alpha_tied", "phi_tied")

_AXIS_TARGETS = {
    "xi": ("xi",),
    "alpha1": ("alpha1",),
    "phi1": ("phi1",),
    "alpha2": ("alpha2",),
    "phi2": ("phi2",),
    "alpha_tied": ("alpha1", "alpha2"),
    "phi_tied": ("phi1", "phi2"),
}


@dataclass(frozen=True)
class ErrorSpec:
    """Named deviations from a baseline parameter set.

    eps_xi, eps_alpha1 and eps_alpha2 are relative; eps_phi1 and eps_phi2
    are absolute offsets in radians.
    """

    eps_xi: float = 0.0
    eps_alpha1: float = 0.0
    eps_phi1: float = 0.0
    eps_alpha2: float = 0.0
    eps_phi2: float = 0.0

    def apply(self, base: PulseParams) -> PulseParams:
        return PulseParams(
            xi=base.xi * (1.0 + self.eps_xi),
            alpha1=base.alpha1 * (1.0 + self.eps_alpha1),
            phi1=base.phi1 + self.eps_phi1,
            alpha2=base.alpha2 * (1.0 + self.eps_alpha2),
            phi2=base.phi2 + self.eps_phi2,
        )

    @classmethod
    def single(cls, which: str, eps: float) -> "ErrorSpec":
        if which not in ERROR_PARAMS:
            raise ValueError(f"unknown error parameter {which!r}")
        return cls(**{f"eps_{which}": float(eps)})


def closed_form_error_fidelity(which: str, eps: float) -> float:
    """Closed-form GHZ fidelity under a single-parameter error.

    Independent of the GHZ phase and of the branch at which the baseline is
    built.  `which` is one of "xi", "alpha1", "phi1", "alpha2", "phi2".
    """
    e = float(eps)
    if which == "xi":
        return abs(3.0 + np.exp(4j * OPTIMAL_XI * e)) / 4.0
    if which == "alpha1":
        return 0.5 * abs(np.cos(OPTIMAL_ALPHA1 * e)) * abs(3.0 * np.cos(2.0 * OPTIMAL_ALPHA1 * e) - 1.0)
    if which == "phi1":
        return (abs(3.0 - 2.0 * np.exp(1j * e) + 3.0 * np.exp(2j * e))
                * abs(1.0 + np.exp(1j * e)) / 8.0)
    if which == "alpha2":
        return abs(np.cos(2.0 * OPTIMAL_XI * e) - 0.5j * np.sin(2.0 * OPTIMAL_XI * e))
    if which == "phi2":
        cp, cm, w = C_PLUS, C_MINUS, W_PHASE
        amp = ((1.0 + np.exp(6j * e)) * cm**3
               + 1j * (np.exp(1j * e) + np.exp(5j * e)) * w * cp * cm**2
               + (np.exp(2j * e) + np.exp(4j * e)) * w * cp**2 * cm
               + 2j * np.exp(3j * e) * cp**3)
        return float(_SQRT3 / 4.0 * np.abs(amp))
    raise ValueError(f"unknown error parameter {which!r}")


def direct_error_fidelity(which: str, eps: float, phi: float = 0.0, m: int = 0) -> float:
    """Simulated GHZ fidelity under a single-parameter error.

    The baseline optimum is rebuilt for the given GHZ phase and branch, the
    error applied per the perturbation rule, and the full sequence evolved.
    """
    base = optimal_params(phi=phi, m=m)
    return ghz_fidelity(ErrorSpec.single(which, eps).apply(base), phi)


def quadratic_coefficient(which: str, h: float = 1e-4) -> float:
    """Leading coefficient c in the expansion 1 - F(eps) = c eps^2 + ...

    Estimated from direct simulation by a central second difference at step
    h, refined by one Richardson step at h/2.  Requires 0 < h <= 1e-3 to
    balance truncation against the fidelity noise floor.
    """
    if not 0.0 < h <= 1e-3:
        raise ValueError("finite-difference step must satisfy 0 < h <= 1e-3")

    def estimate(step: float) -> float:
        fp = direct_error_fidelity(which, step)
        fm = direct_error_fidelity(which, -step)
        return (2.0 - fp - fm) / (2.0 * step * step)

    coarse, fine = estimate(h), estimate(h / 2.0)
    return (4.0 * fine - coarse) / 3.0


@dataclass(frozen=True)
class SweepResult:
    """Infidelity over a Cartesian error grid.

    `infidelity` has one dimension per axis, indexed row-major in the axis
    order given to `sweep`.
    """

    axes: tuple[str, ...]
    grids: tuple[np.ndarray, ...]
    infidelity: np.ndarray
    phi: float
    baseline: PulseParams

    def iter_rows(self):
        """Yield (eps values..., infidelity) tuples in row-major order."""
        mesh = np.meshgrid(*self.grids, indexing="ij")
        flat = [m.ravel() for m in mesh] + [self.infidelity.ravel()]
        for row in zip(*flat):
            yield tuple(float(v) for v in row)


def sweep(axes: Sequence[tuple[str, Sequence[float]]], phi: float = 0.0,
          m: int = 0) -> SweepResult:
    """Infidelity 1 - F over a Cartesian grid of 1 to 3 error axes.

    Each axis is a pair (name, grid) with name from SWEEP_AXES; tied axes
    apply one value to both pulses (eps_alpha1 = eps_alpha2 for
    "alpha_tied", eps_phi1 = eps_phi2 for "phi_tied").  Evaluated by direct
    sequence simulation on the branch-m baseline, never via the closed
    forms.

    Raises
    ------
    ValueError
        For more than 3 axes, unknown axis names, or axes that touch the
        same underlying parameter twice.
    """
    if not 1 <= len(axes) <= 3:
        raise ValueError("sweep supports 1 to 3 simultaneous error axes")
    names = [name for name, _ in axes]
    touched: list[str] = []
    for name in names:
        if name not in _AXIS_TARGETS:
            raise ValueError(f"unknown sweep axis {name!r}")
        for target in _AXIS_TARGETS[name]:
            if target in touched:
                raise ValueError(f"axes overlap on parameter {target!r}")
            touched.append(target)

    grids = tuple(np.asarray(g, dtype=float) for _, g in axes)
    for g in grids:
        if g.ndim != 1 or g.size == 0:
            raise ValueError("each axis grid must be a non-empty 1-d array")

    base = optimal_params(phi=phi, m=m)
    mesh = np.meshgrid(*grids, indexing="ij")
    eps = {p: 0.0 for p in ERROR_PARAMS}
    for name, values in zip(names, mesh):
        for target in _AXIS_TARGETS[name]:
            eps[target] = values

    fid = _fidelity_batch(
        base.xi * (1.0 + np.asarray(eps["xi"])),
        base.alpha1 * (1.0 + np.asarray(eps["alpha1"])),
        base.phi1 + np.asarray(eps["phi1"]),
        base.alpha2 * (1.0 + np.asarray(eps["alpha2"])),
        base.phi2 + np.asarray(eps["phi2"]),
        phi,
    )
    infidelity = 1.0 - np.broadcast_to(fid, mesh[0].shape)
    return SweepResult(axes=tuple(names), grids=grids,
                       infidelity=np.array(infidelity, dtype=float),
                       phi=phi, baseline=base)


def joint_quadratic_form(h: float = 1e-4) -> np.ndarray:
    """Quadratic form of the infidelity in joint duration/angle offsets.

    The offsets here are absolute: e_xi is added to the pulse duration and
    a single e_alpha is added to both rotation half-angles (this is the
    convention in which the coefficients are the clean constants 3/2, 5
    and 1).  Returns the symmetric 2x2 matrix M with

        1 - F = [e_xi, e_alpha] M [e_xi, e_alpha]^T + higher order,

    estimated by central differences at the origin with one Richardson
    refinement.
    """
    base = optimal_params()

    def infid(dxi: float, dalpha: float) -> float:
        params = PulseParams(
            xi=base.xi + dxi,
            alpha1=base.alpha1 + dalpha,
            phi1=base.phi1,
            alpha2=base.alpha2 + dalpha,
            phi2=base.phi2,
        )
        return 1.0 - ghz_fidelity(params, 0.0)

    def coefficients(step: float):
        a = (infid(step, 0.0) + infid(-step, 0.0)) / (2.0 * step * step)
        b = (infid(0.0, step) + infid(0.0, -step)) / (2.0 * step * step)
        c = (infid(step, step) + infid(-step, -step)
             - infid(step, -step) - infid(-step, step)) / (4.0 * step * step)
        return np.array([a, b, c])

    coarse, fine = coefficients(h), coefficients(h / 2.0)
    a, b, c = (4.0 * fine - coarse) / 3.0
    return np.array([[a, c / 2.0], [c / 2.0, b]])


def arbitrary_phi_fidelity(which: str, eps: float, phi_grid_size: int = 256) -> float:
    """Best GHZ fidelity over all target phases, under one axis-angle error.

    Models the situation where any GHZ-type state is acceptable: the final
    state of the perturbed sequence is compared against GHZ(phi) for phi on
    a grid of `phi_grid_size` points, and the best grid point is refined by
    a bounded 1-d optimization.

    Parameters
    ----------
    which : str
        "phi1" or "phi2" (only the axis angles have phase-dependent optima).
    eps : float
        Absolute angle error in radians.
    phi_grid_size : int
        Number of grid points, at least 100.
    """
    if which not in ("phi1", "phi2"):
        raise ValueError("arbitrary-phase relaxation applies to 'phi1' or 'phi2'")
    if phi_grid_size < 100:
        raise ValueError("phase grid needs at least 100 points")

    perturbed = ErrorSpec.single(which, eps).apply(optimal_params())
    w_sector = np.array([0.0, 1.0, 0.0, 0.0], dtype=complex)
    psi = sequence_unitary(perturbed, Direction.W_TO_GHZ) @ w_sector

    def fid(phi: float) -> float:
        return float(np.abs(psi[0] + np.exp(-1j * phi) * psi[3])) / _SQRT2

    grid = np.linspace(0.0, 2.0 * np.pi, phi_grid_size, endpoint=False)
    values = np.abs(psi[0] + np.exp(-1j * grid) * psi[3]) / _SQRT2
    k = int(np.argmax(values))
    spacing = 2.0 * np.pi / phi_grid_size
    res = minimize_scalar(lambda p: -fid(p),
                          bounds=(grid[k] - spacing, grid[k] + spacing),
                          method="bounded",
                          options={"xatol": 1e-12})
    return max(float(values[k]), float(-res.fun))
