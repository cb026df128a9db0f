import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wghz.linalg import herm_expm, is_unitary, kron
from wghz.operators import basis_state, ising_hamiltonian
from wghz.pulses import (
    Direction,
    PulseParams,
    _u_c_batch,
    _u_c_scalar,
    axis_operator,
    s_matrices,
    sequence_unitary,
    sequence_unitary_full,
    u_c,
    u_c_full,
    u_zz,
    u_zz_full,
)
from wghz.symmetry import compress
from wghz.convert import OPTIMAL_XI, optimal_params

angles = st.floats(-10, 10, allow_nan=False)


def random_params(rng):
    return PulseParams(xi=rng.uniform(0, np.pi / 2),
                       alpha1=rng.uniform(0, np.pi),
                       phi1=rng.uniform(0, 2 * np.pi),
                       alpha2=rng.uniform(0, np.pi),
                       phi2=rng.uniform(0, 2 * np.pi))


class TestUzz:
    def test_zero_duration(self):
        assert np.allclose(u_zz(0.0), np.eye(4), atol=0)
        assert np.allclose(u_zz_full(0.0), np.eye(8), atol=0)

    def test_quarter_pi(self):
        xi = np.pi / 4
        expected = np.diag(np.exp(-1j * xi * np.array([3, -1, -1, 3])))
        assert np.abs(u_zz(xi) - expected).max() < 1e-15

    def test_full_diagonal_values(self):
        xi = 0.37
        diag = np.diag(u_zz_full(xi))
        for idx in range(8):
            expected = np.exp(-3j * xi) if idx in (0, 7) else np.exp(1j * xi)
            assert np.isclose(diag[idx], expected, atol=1e-15)

    @settings(max_examples=25, deadline=None)
    @given(xi=angles)
    def test_half_pi_periodicity_up_to_phase(self, xi):
        assert np.abs(u_zz(xi + np.pi / 2) - 1j * u_zz(xi)).max() < 1e-12

    def test_matches_hermitian_exponential(self):
        for xi in (0.11, 0.83, 2.4):
            oracle = herm_expm(ising_hamiltonian(), xi)
            assert np.abs(u_zz_full(xi) - oracle).max() < 1e-12

    def test_compress_consistency(self):
        for xi in (0.0, 0.31, 1.7):
            assert np.abs(compress(u_zz_full(xi)) - u_zz(xi)).max() < 1e-13


class TestUc:
    def test_identity_at_zero(self):
        assert np.allclose(u_c(0.0, 1.23), np.eye(4), atol=1e-15)
        assert np.allclose(u_c_full(0.0, 1.23), np.eye(8), atol=1e-15)

    def test_tensor_product_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            alpha, phi = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
            rot = herm_expm(axis_operator(phi), alpha)
            assert np.abs(u_c_full(alpha, phi) - kron(rot, rot, rot)).max() < 1e-12

    def test_compress_agreement(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            alpha, phi = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
            assert np.abs(u_c(alpha, phi) - compress(u_c_full(alpha, phi))).max() < 1e-12

    def test_half_pi_x_rotation_flips_all(self):
        got = u_c_full(np.pi / 2, 0.0) @ basis_state("000")
        assert np.abs(got - 1j * basis_state("111")).max() < 1e-13

    def test_first_pulse_overlap_with_ghz(self):
        zeta1 = np.array([0, 1, 0, 0], dtype=complex)
        moved = u_c(np.pi / 4, 5 * np.pi / 6) @ zeta1
        ghz = np.array([1, 0, 0, 1]) / np.sqrt(2)
        assert abs(abs(np.vdot(ghz, moved)) - np.sqrt(3) / 2) < 1e-13

    @settings(max_examples=30, deadline=None)
    @given(alpha=angles, phi=angles)
    def test_unitary_and_sign_flip(self, alpha, phi):
        u = u_c(alpha, phi)
        assert is_unitary(u)
        assert np.abs(u_c(alpha + np.pi, phi) + u).max() < 1e-12

    def test_scalar_fast_path_matches(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            alpha, phi = rng.uniform(-7, 7), rng.uniform(-7, 7)
            assert np.abs(u_c(alpha, phi) - _u_c_scalar(alpha, phi)).max() < 1e-15

    def test_batch_matches_scalar(self):
        rng = np.random.default_rng(10)
        alphas = rng.uniform(-5, 5, size=12)
        phis = rng.uniform(-5, 5, size=12)
        batch = _u_c_batch(alphas, phis)
        for k in range(12):
            assert np.abs(batch[k] - u_c(alphas[k], phis[k])).max() < 1e-15

    def test_s_matrices_are_hermitian(self):
        for phi in (0.0, 1.1, 4.4):
            for s in s_matrices(phi):
                assert np.abs(s - s.conj().T).max() < 1e-15


class TestSequence:
    def test_identity_at_zero(self):
        p = PulseParams(0.0, 0.0, 0.0, 0.0, 0.0)
        for d in Direction:
            assert np.allclose(sequence_unitary(p, d), np.eye(4), atol=1e-15)

    def test_optimal_conversion(self):
        p = optimal_params()
        zeta1 = np.array([0, 1, 0, 0], dtype=complex)
        ghz = np.array([1, 0, 0, 1]) / np.sqrt(2)
        overlap = abs(np.vdot(ghz, sequence_unitary(p) @ zeta1))
        assert overlap >= 1 - 1e-9

    def test_pulse_order_per_direction(self):
        p = PulseParams(0.4, 0.3, 1.0, 0.8, 2.0)
        forward = u_c(p.alpha2, p.phi2) @ u_zz(p.xi) @ u_c(p.alpha1, p.phi1)
        backward = u_c(p.alpha1, p.phi1) @ u_zz(p.xi) @ u_c(p.alpha2, p.phi2)
        assert np.abs(sequence_unitary(p, Direction.W_TO_GHZ) - forward).max() < 1e-15
        assert np.abs(sequence_unitary(p, Direction.GHZ_TO_W) - backward).max() < 1e-15

    def test_full_space_oracle(self):
        rng = np.random.default_rng(11)
        worst = 0.0
        for _ in range(100):
            p = random_params(rng)
            for d in Direction:
                small = sequence_unitary(p, d)
                big = compress(sequence_unitary_full(p, d))
                worst = max(worst, float(np.abs(small - big).max()))
        assert worst <= 1e-12

    def test_unitarity(self):
        rng = np.random.default_rng(12)
        for _ in range(20):
            p = random_params(rng)
            assert is_unitary(sequence_unitary(p))
            assert is_unitary(sequence_unitary_full(p))

    def test_optimal_xi_value(self):
        assert np.isclose(OPTIMAL_XI, np.arccos(1.0 / 3.0) / 4.0, atol=0)
        assert abs(OPTIMAL_XI - 0.3077) < 5e-5


class TestPulseParams:
    def test_rejects_negative_duration(self):
        with pytest.raises(ValueError):
            PulseParams(-0.1, 0, 0, 0, 0)

    def test_reduced_mod_two_pi(self):
        p = PulseParams(0.3, 2 * np.pi + 0.1, -0.2, 7.0, 13.0)
        r = p.reduced()
        for value in (r.alpha1, r.phi1, r.alpha2, r.phi2):
            assert 0 <= value < 2 * np.pi
        assert np.isclose(r.phi1, 2 * np.pi - 0.2)

    def test_direction_labels(self):
        assert Direction.from_label("w2ghz") is Direction.W_TO_GHZ
        assert Direction.from_label("ghz2w") is Direction.GHZ_TO_W
        assert Direction.W_TO_GHZ.label == "w2ghz"
        with pytest.raises(ValueError):
            Direction.from_label("sideways")
