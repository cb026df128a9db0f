"""Named invariant checks behind the `verify` CLI command.

Each check returns a (name, passed, detail) triple; `run_all` executes the
whole battery.  The checks mirror the library's cross-module invariants:
sector algebra dimensions, oracle agreement between the 4x4 and 8x8
pipelines, branch recovery, closed-form/simulation agreement, quadratic
prefactors and the first-pulse stride.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from . import convert, linalg, operators, pulses, robustness, symmetry

__all__ = ["CheckResult", "run_all", "ALL_CHECKS"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check_u_s3_dimension() -> tuple[bool, str]:
    dim = symmetry.permutation_invariant_algebra_dimension()
    return dim == 20, f"{dim} == 20"


def _check_sector_dims() -> tuple[bool, str]:
    dims = symmetry.sector_decomposition_dims()
    return dims == [4, 2, 2], f"{dims} == [4, 2, 2]"


def _check_dynamical_dim() -> tuple[bool, str]:
    gens = [1j * operators.ising_hamiltonian(),
            1j * operators.collective("X"),
            1j * operators.collective("Y")]
    dim = symmetry.dynamical_lie_dimension(gens)
    return 3 < dim <= 20, f"dimension {dim} (expected in (3, 20])"


def _check_compress_hzz() -> tuple[bool, str]:
    got = symmetry.compress(operators.ising_hamiltonian())
    dev = float(np.abs(got - np.diag([3.0, -1.0, -1.0, 3.0])).max())
    return dev <= 1e-13, f"max deviation {dev:.2e} <= 1e-13"


def _check_hermexp_unitarity() -> tuple[bool, str]:
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(25):
        a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
        h = (a + a.conj().T) / 2
        u = linalg.herm_expm(h, rng.uniform(-3, 3))
        worst = max(worst, float(np.linalg.norm(u.conj().T @ u - np.eye(8))))
    return worst <= 1e-12, f"worst unitarity defect {worst:.2e} <= 1e-12"


def _check_sector_pipeline() -> tuple[bool, str]:
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(100):
        p = pulses.PulseParams(xi=rng.uniform(0, np.pi / 2),
                               alpha1=rng.uniform(0, np.pi),
                               phi1=rng.uniform(0, 2 * np.pi),
                               alpha2=rng.uniform(0, np.pi),
                               phi2=rng.uniform(0, 2 * np.pi))
        for d in pulses.Direction:
            small = pulses.sequence_unitary(p, d)
            big = symmetry.compress(pulses.sequence_unitary_full(p, d))
            worst = max(worst, float(np.abs(small - big).max()))
    return worst <= 1e-12, f"max 4x4 vs compressed-8x8 deviation {worst:.2e} <= 1e-12"


def _check_uc_tensor_oracle() -> tuple[bool, str]:
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(100):
        alpha, phi = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
        rot = linalg.herm_expm(pulses.axis_operator(phi), alpha)
        oracle = symmetry.compress(linalg.kron(rot, rot, rot))
        worst = max(worst, float(np.abs(pulses.u_c(alpha, phi) - oracle).max()))
    return worst <= 1e-12, f"max deviation from rotation oracle {worst:.2e} <= 1e-12"


def _check_sector_invariance() -> tuple[bool, str]:
    rng = np.random.default_rng(8)
    basis = symmetry.sector_basis()
    proj = basis.projector.conj().T @ basis.projector
    leak = 0.0
    for _ in range(20):
        u = pulses.u_c_full(rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)) \
            @ pulses.u_zz_full(rng.uniform(0, np.pi / 2)) \
            @ pulses.u_c_full(rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))
        for zeta in basis.vectors:
            v = u @ zeta
            leak = max(leak, float(np.linalg.norm(v - proj @ v)))
    return leak <= 1e-12, f"max out-of-sector leakage {leak:.2e} <= 1e-12"


def _check_branch_recovery() -> tuple[bool, str]:
    results = convert.optimize(0.0, pulses.Direction.W_TO_GHZ, seed=7, restarts=32)
    found = {r.branch for r in results if r.branch is not None
             and r.fidelity >= 1 - 1e-9}
    pairs = sorted(
        (r.branch, round(r.params.phi1, 6), round(r.params.phi2, 6))
        for r in results if r.branch is not None
    )
    return found == {0, 1, 2}, f"branches (m, phi1, phi2): {pairs}"


def _check_reverse_branch_recovery() -> tuple[bool, str]:
    results = convert.optimize(0.0, pulses.Direction.GHZ_TO_W, seed=7, restarts=32)
    found = {r.branch for r in results if r.branch is not None
             and r.fidelity >= 1 - 1e-9}
    pairs = sorted(
        (r.branch, round(r.params.phi1, 6), round(r.params.phi2, 6))
        for r in results if r.branch is not None
    )
    return found == {0, 1, 2}, f"branches (m, phi1, phi2): {pairs}"


def _check_branch_equivalence() -> tuple[bool, str]:
    fids = [convert.ghz_fidelity(convert.optimal_params(m=m), 0.0) for m in range(3)]
    spread = max(fids) - min(fids)
    return spread <= 1e-10, f"branch fidelity spread {spread:.2e} <= 1e-10"


def _check_closed_form_xi() -> tuple[bool, str]:
    worst = 0.0
    for xi in np.linspace(0, np.pi / 2, 41):
        for phi in np.linspace(0, 2 * np.pi, 23, endpoint=False):
            p = pulses.PulseParams(xi=xi, alpha1=np.pi / 4, phi1=5 * np.pi / 6,
                                   alpha2=xi, phi2=np.pi / 3)
            worst = max(worst, abs(convert.ghz_fidelity(p, phi)
                                   - convert.closed_form_fidelity_xi(xi, phi)))
    return worst <= 1e-12, f"max closed-form deviation {worst:.2e} <= 1e-12"


def _check_error_formulas() -> tuple[bool, str]:
    worst = 0.0
    eps_grid = np.linspace(-0.2, 0.2, 401)
    for which in robustness.ERROR_PARAMS:
        for eps in eps_grid:
            worst = max(worst, abs(robustness.closed_form_error_fidelity(which, eps)
                                   - robustness.direct_error_fidelity(which, eps)))
    return worst <= 1e-12, f"max closed-form vs simulation deviation {worst:.2e} <= 1e-12"


def _check_quadratic_prefactors() -> tuple[bool, str]:
    targets = {
        "xi": 1.5 * convert.OPTIMAL_XI**2,
        "alpha1": 3.5 * convert.OPTIMAL_ALPHA1**2,
        "phi1": 7.0 / 8.0,
        "alpha2": 1.5 * convert.OPTIMAL_XI**2,
        "phi2": 2.0 - 3.0 * np.sqrt(6.0) / 4.0,
    }
    worst = 0.0
    values = {}
    for which, target in targets.items():
        c = robustness.quadratic_coefficient(which)
        values[which] = round(float(c), 3)
        worst = max(worst, abs(c - target))
    return worst <= 1e-4, f"max |c - exact| {worst:.2e} <= 1e-4, rounded {values}"


def _check_sensitivity_ratio() -> tuple[bool, str]:
    ratio = (robustness.quadratic_coefficient("alpha1")
             / robustness.quadratic_coefficient("alpha2"))
    return abs(ratio - 15.0) <= 1.0, f"alpha1/alpha2 quadratic ratio {ratio:.3f} within 15 +- 1"


def _check_first_pulse_stride() -> tuple[bool, str]:
    p = pulses.PulseParams(xi=0.0, alpha1=np.pi / 4, phi1=5 * np.pi / 6,
                           alpha2=0.0, phi2=0.0)
    dev = abs(convert.ghz_fidelity(p, 0.0) - np.sqrt(3.0) / 2.0)
    return dev <= 1e-12, f"|F - sqrt(3)/2| = {dev:.2e} <= 1e-12"


ALL_CHECKS: tuple[tuple[str, Callable[[], tuple[bool, str]]], ...] = (
    ("u_s3_dimension", _check_u_s3_dimension),
    ("sector_dims", _check_sector_dims),
    ("dynamical_dim", _check_dynamical_dim),
    ("compress_hzz", _check_compress_hzz),
    ("hermexp_unitarity", _check_hermexp_unitarity),
    ("sector_pipeline_agreement", _check_sector_pipeline),
    ("uc_tensor_oracle", _check_uc_tensor_oracle),
    ("sector_invariance", _check_sector_invariance),
    ("branch_recovery", _check_branch_recovery),
    ("reverse_branch_recovery", _check_reverse_branch_recovery),
    ("branch_equivalence", _check_branch_equivalence),
    ("closed_form_xi", _check_closed_form_xi),
    ("error_formulas", _check_error_formulas),
    ("quadratic_prefactors", _check_quadratic_prefactors),
    ("sensitivity_ratio", _check_sensitivity_ratio),
    ("first_pulse_stride", _check_first_pulse_stride),
)


def run_all() -> Iterable[CheckResult]:
    """Run every check in order, yielding results as they complete."""
    for name, fn in ALL_CHECKS:
        try:
            passed, detail = fn()
        except Exception as exc:   # a crash is a failure, not an abort
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        yield CheckResult(name=name, passed=passed, detail=detail)
