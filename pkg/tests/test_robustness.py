import numpy as np
import pytest

from wghz.convert import OPTIMAL_ALPHA1, OPTIMAL_XI, ghz_fidelity, optimal_params
from wghz.pulses import PulseParams, sequence_unitary
from wghz.robustness import (
    C_MINUS,
    C_PLUS,
    ERROR_PARAMS,
    W_PHASE,
    ErrorSpec,
    arbitrary_phi_fidelity,
    closed_form_error_fidelity,
    direct_error_fidelity,
    joint_quadratic_form,
    quadratic_coefficient,
    sweep,
)


class TestConstants:
    def test_unit_modulus_weight(self):
        assert abs(abs(W_PHASE) - 1.0) < 1e-15
        assert abs(W_PHASE - (1 + 2 * np.sqrt(2) * 1j) / 3) < 1e-15

    def test_amplitudes_partition_unity(self):
        assert abs(C_PLUS**2 + C_MINUS**2 - 1.0) < 1e-15

    def test_geometric_identities(self):
        # the constants are the cosine/sine of the optimal duration angle,
        # and the weight is the corresponding spectral phase
        assert abs(C_PLUS - np.cos(OPTIMAL_XI)) < 1e-15
        assert abs(C_MINUS - np.sin(OPTIMAL_XI)) < 1e-15
        assert abs(W_PHASE - np.exp(4j * OPTIMAL_XI)) < 1e-15


class TestErrorSpec:
    def test_perturbation_rule(self):
        base = PulseParams(0.4, 0.8, 1.0, 0.3, 2.0)
        spec = ErrorSpec(eps_xi=0.1, eps_alpha1=-0.2, eps_phi1=0.05,
                         eps_alpha2=0.3, eps_phi2=-0.07)
        got = spec.apply(base)
        assert got.xi == pytest.approx(0.4 * 1.1, abs=0)
        assert got.alpha1 == pytest.approx(0.8 * 0.8, abs=0)
        assert got.phi1 == pytest.approx(1.05, abs=0)
        assert got.alpha2 == pytest.approx(0.3 * 1.3, abs=0)
        assert got.phi2 == pytest.approx(1.93, abs=0)

    def test_single_constructor(self):
        spec = ErrorSpec.single("alpha2", 0.2)
        assert spec.eps_alpha2 == 0.2
        assert spec.eps_xi == spec.eps_phi1 == 0.0
        with pytest.raises(ValueError):
            ErrorSpec.single("nope", 0.1)


class TestClosedForms:
    @pytest.mark.parametrize("which", ERROR_PARAMS)
    def test_no_error_is_perfect(self, which):
        assert abs(closed_form_error_fidelity(which, 0.0) - 1.0) < 1e-12

    def test_duration_error_form(self):
        eps = 0.1
        expected = abs(3 + np.exp(4j * OPTIMAL_XI * eps)) / 4
        assert abs(closed_form_error_fidelity("xi", eps) - expected) < 1e-15
        assert abs(closed_form_error_fidelity("xi", eps)
                   - direct_error_fidelity("xi", eps)) < 1e-12

    def test_second_axis_error_uses_constants(self):
        eps = 0.05
        assert abs(closed_form_error_fidelity("phi2", eps)
                   - direct_error_fidelity("phi2", eps)) < 1e-12

    @pytest.mark.parametrize("which", ERROR_PARAMS)
    def test_matches_simulation_over_range(self, which):
        worst = max(
            abs(closed_form_error_fidelity(which, eps)
                - direct_error_fidelity(which, eps))
            for eps in np.linspace(-0.2, 0.2, 101)
        )
        assert worst < 1e-12

    @pytest.mark.parametrize("which", ["xi", "phi1"])
    def test_even_in_the_error(self, which):
        for eps in (0.03, 0.11, 0.19):
            assert abs(closed_form_error_fidelity(which, eps)
                       - closed_form_error_fidelity(which, -eps)) < 1e-12

    def test_phase_and_branch_independence(self):
        for which in ERROR_PARAMS:
            ref = closed_form_error_fidelity(which, 0.07)
            for phi in np.linspace(0, 2 * np.pi, 5, endpoint=False):
                for m in range(3):
                    assert abs(direct_error_fidelity(which, 0.07, phi=phi, m=m)
                               - ref) < 1e-12

    def test_unknown_parameter(self):
        with pytest.raises(ValueError):
            closed_form_error_fidelity("theta", 0.1)


class TestQuadraticCoefficients:
    def test_values(self):
        targets = {
            "xi": 1.5 * OPTIMAL_XI**2,
            "alpha1": 3.5 * OPTIMAL_ALPHA1**2,
            "phi1": 7 / 8,
            "alpha2": 1.5 * OPTIMAL_XI**2,
            "phi2": 2 - 3 * np.sqrt(6) / 4,
        }
        for which, target in targets.items():
            assert abs(quadratic_coefficient(which) - target) < 1e-4

    def test_duration_equals_second_angle(self):
        assert abs(quadratic_coefficient("xi")
                   - quadratic_coefficient("alpha2")) < 1e-6

    def test_step_validation(self):
        with pytest.raises(ValueError):
            quadratic_coefficient("xi", h=0.0)
        with pytest.raises(ValueError):
            quadratic_coefficient("xi", h=0.01)


class TestSweep:
    def test_axis_validation(self):
        grid = np.linspace(-0.1, 0.1, 3)
        with pytest.raises(ValueError):
            sweep([])
        with pytest.raises(ValueError):
            sweep([("xi", grid)] * 4)
        with pytest.raises(ValueError):
            sweep([("warp", grid)])
        with pytest.raises(ValueError):
            sweep([("alpha1", grid), ("alpha_tied", grid)])

    def test_one_axis_matches_closed_form(self):
        grid = np.linspace(-0.2, 0.2, 81)
        result = sweep([("xi", grid)])
        expected = np.array([1 - closed_form_error_fidelity("xi", e) for e in grid])
        assert np.abs(result.infidelity - expected).max() < 1e-12

    def test_two_axis_shape_and_values(self):
        g1 = np.linspace(-0.1, 0.1, 5)
        g2 = np.linspace(-0.05, 0.05, 3)
        result = sweep([("phi1", g1), ("phi2", g2)])
        assert result.infidelity.shape == (5, 3)
        base = optimal_params()
        spec = ErrorSpec(eps_phi1=g1[4], eps_phi2=g2[0])
        direct = 1 - ghz_fidelity(spec.apply(base), 0.0)
        assert abs(result.infidelity[4, 0] - direct) < 1e-12

    def test_tied_axes(self):
        grid = np.linspace(-0.1, 0.1, 7)
        result = sweep([("alpha_tied", grid)])
        base = optimal_params()
        for k, eps in enumerate(grid):
            spec = ErrorSpec(eps_alpha1=eps, eps_alpha2=eps)
            direct = 1 - ghz_fidelity(spec.apply(base), 0.0)
            assert abs(result.infidelity[k] - direct) < 1e-12

    def test_three_axes(self):
        grid = np.linspace(-0.05, 0.05, 3)
        result = sweep([("xi", grid), ("phi_tied", grid), ("alpha_tied", grid)])
        assert result.infidelity.shape == (3, 3, 3)
        assert result.infidelity.min() >= 0.0

    def test_row_major_iteration(self):
        g1 = np.array([-0.1, 0.1])
        g2 = np.array([-0.2, 0.0, 0.2])
        result = sweep([("phi1", g1), ("phi2", g2)])
        rows = list(result.iter_rows())
        assert len(rows) == 6
        assert rows[0][:2] == (-0.1, -0.2)
        assert rows[1][:2] == (-0.1, 0.0)
        assert rows[3][:2] == (0.1, -0.2)
        flat = result.infidelity.ravel()
        assert all(abs(r[-1] - f) < 1e-15 for r, f in zip(rows, flat))


class TestJointQuadraticForm:
    def test_symmetric_positive_definite(self):
        m = joint_quadratic_form()
        assert np.allclose(m, m.T, atol=0)
        assert np.all(np.linalg.eigvalsh(m) > 0)

    def test_predicts_small_offsets(self):
        m = joint_quadratic_form()
        base = optimal_params()
        for dxi, da in [(3e-3, -2e-3), (-1e-3, 1.5e-3)]:
            p = PulseParams(base.xi + dxi, base.alpha1 + da, base.phi1,
                            base.alpha2 + da, base.phi2)
            actual = 1 - ghz_fidelity(p, 0.0)
            predicted = np.array([dxi, da]) @ m @ np.array([dxi, da])
            assert abs(actual - predicted) < 5e-3 * max(actual, 1e-12)


class TestArbitraryPhase:
    def test_no_error_is_perfect(self):
        assert abs(arbitrary_phi_fidelity("phi1", 0.0) - 1.0) < 1e-12

    def test_dominates_fixed_phase(self):
        for eps in np.linspace(-0.1, 0.1, 9):
            fixed = direct_error_fidelity("phi1", eps)
            arb = arbitrary_phi_fidelity("phi1", eps)
            assert arb >= fixed - 1e-12

    def test_matches_amplitude_oracle(self):
        # max over the target phase has the closed form (|a0| + |a3|)/sqrt(2)
        w_sector = np.array([0, 1, 0, 0], dtype=complex)
        for which, eps in [("phi1", 0.08), ("phi2", -0.06)]:
            perturbed = ErrorSpec.single(which, eps).apply(optimal_params())
            psi = sequence_unitary(perturbed) @ w_sector
            oracle = (abs(psi[0]) + abs(psi[3])) / np.sqrt(2)
            assert abs(arbitrary_phi_fidelity(which, eps) - oracle) < 1e-10

    def test_validation(self):
        with pytest.raises(ValueError):
            arbitrary_phi_fidelity("alpha1", 0.1)
        with pytest.raises(ValueError):
            arbitrary_phi_fidelity("phi1", 0.1, phi_grid_size=50)
