import numpy as np
import pytest

from wghz.operators import (
    basis_state,
    collective,
    ghz_state,
    ising_hamiltonian,
    pauli_at,
    w_state,
)
from wghz.symmetry import all_permutations, permutation_operator


class TestPauliAt:
    def test_z_on_first_of_two(self):
        assert np.allclose(pauli_at("Z", 1, 2), np.diag([1, 1, -1, -1]), atol=0)

    def test_involution(self):
        sq = pauli_at("X", 2, 2) @ pauli_at("X", 2, 2)
        assert np.allclose(sq, np.eye(4), atol=0)

    def test_different_sites_commute(self):
        a = pauli_at("X", 1, 3)
        b = pauli_at("Y", 2, 3)
        assert np.abs(a @ b - b @ a).max() == 0

    @pytest.mark.parametrize("site", [0, 4])
    def test_site_out_of_range(self, site):
        with pytest.raises(ValueError, match="out of range"):
            pauli_at("X", site, 3)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            pauli_at("Q", 1, 3)


class TestIsingHamiltonian:
    def test_two_qubits(self):
        assert np.allclose(ising_hamiltonian(2, 1.0), np.diag([1, -1, -1, 1]), atol=0)

    def test_three_qubit_diagonal(self):
        h = ising_hamiltonian(3, 1.0)
        diag = np.real(np.diag(h))
        # 3 on the all-equal strings, -1 on the six mixed ones
        expected = [3 if idx in (0, 7) else -1 for idx in range(8)]
        assert np.array_equal(diag, expected)
        assert np.abs(h - np.diag(diag)).max() == 0

    def test_spectrum_multiplicities(self):
        evals = np.linalg.eigvalsh(ising_hamiltonian())
        assert np.sum(np.isclose(evals, 3.0)) == 2
        assert np.sum(np.isclose(evals, -1.0)) == 6

    def test_coupling_scales(self):
        assert np.allclose(ising_hamiltonian(3, 2.5), 2.5 * ising_hamiltonian(3, 1.0))

    def test_validation(self):
        with pytest.raises(ValueError):
            ising_hamiltonian(1)
        with pytest.raises(ValueError):
            ising_hamiltonian(3, j=0.0)

    def test_commutes_with_permutations(self):
        h = ising_hamiltonian()
        for sigma in all_permutations():
            p = permutation_operator(sigma)
            assert np.linalg.norm(h @ p - p @ h) <= 1e-13


class TestCollective:
    def test_single_qubit_is_bare_pauli(self):
        assert np.allclose(collective("X", 1), pauli_at("X", 1, 1), atol=0)

    def test_action_on_vacuum(self):
        got = collective("X") @ basis_state("000")
        expected = basis_state("100") + basis_state("010") + basis_state("001")
        assert np.allclose(got, expected, atol=0)
        assert np.isclose(np.linalg.norm(got), np.sqrt(3))

    def test_su2_commutator(self):
        cx, cy = collective("X"), collective("Y")
        cz = sum(pauli_at("Z", k, 3) for k in range(1, 4))
        assert np.abs(cx @ cy - cy @ cx - 2j * cz).max() < 1e-13

    def test_commutes_with_permutations(self):
        for kind in ("X", "Y"):
            c = collective(kind)
            for sigma in all_permutations():
                p = permutation_operator(sigma)
                assert np.linalg.norm(c @ p - p @ c) <= 1e-13

    def test_rejects_z(self):
        with pytest.raises(ValueError):
            collective("Z")


class TestStates:
    def test_w_state(self):
        expected = (basis_state("100") + basis_state("010") + basis_state("001")) / np.sqrt(3)
        assert np.allclose(w_state(), expected, atol=0)
        assert np.isclose(np.linalg.norm(w_state()), 1.0)

    def test_ghz_zero_phase(self):
        expected = (basis_state("000") + basis_state("111")) / np.sqrt(2)
        assert np.allclose(ghz_state(0.0), expected, atol=0)

    def test_ghz_phase_reduction(self):
        assert np.allclose(ghz_state(0.3), ghz_state(0.3 + 2 * np.pi), atol=1e-15)

    @pytest.mark.parametrize("phi", np.linspace(0, 2 * np.pi, 7))
    def test_ghz_w_orthogonal(self, phi):
        assert abs(np.vdot(ghz_state(phi), w_state())) == 0

    def test_bad_bit_string(self):
        with pytest.raises(ValueError):
            basis_state("10x")
