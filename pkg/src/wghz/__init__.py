"""W / GHZ state interconversion for three Ising-coupled qubits under global
transverse control: pulse-sequence unitaries, the permutation-symmetric
sector reduction, fidelity optimization and systematic-error robustness."""

from .linalg import herm_expm, kron, span_dimension
from .operators import (
    basis_state,
    collective,
    ghz_state,
    ising_hamiltonian,
    pauli,
    pauli_at,
    w_state,
)
from .symmetry import (
    SectorBasis,
    compress,
    dynamical_lie_dimension,
    permutation_invariant_algebra_dimension,
    permutation_operator,
    sector_basis,
    sector_decomposition_dims,
    symmetrize,
)
from .pulses import (
    Direction,
    PulseParams,
    sequence_unitary,
    sequence_unitary_full,
    u_c,
    u_c_full,
    u_zz,
    u_zz_full,
)
from .convert import (
    OPTIMAL_ALPHA1,
    OPTIMAL_XI,
    BranchLawFit,
    OptResult,
    branch_angles,
    branch_law_fit,
    closed_form_fidelity_xi,
    ghz_fidelity,
    minimal_duration_scan,
    optimal_params,
    optimize,
    w_fidelity,
)
from .robustness import (
    ErrorSpec,
    arbitrary_phi_fidelity,
    closed_form_error_fidelity,
    direct_error_fidelity,
    joint_quadratic_form,
    quadratic_coefficient,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "kron", "herm_expm", "span_dimension",
    "pauli", "pauli_at", "ising_hamiltonian", "collective",
    "basis_state", "w_state", "ghz_state",
    "permutation_operator", "symmetrize", "SectorBasis", "sector_basis",
    "compress", "permutation_invariant_algebra_dimension",
    "sector_decomposition_dims", "dynamical_lie_dimension",
    "PulseParams", "Direction", "u_zz", "u_zz_full", "u_c", "u_c_full",
    "sequence_unitary", "sequence_unitary_full",
    "OPTIMAL_XI", "OPTIMAL_ALPHA1", "branch_angles", "optimal_params",
    "ghz_fidelity", "w_fidelity", "closed_form_fidelity_xi",
    "OptResult", "optimize", "BranchLawFit", "branch_law_fit",
    "minimal_duration_scan",
    "ErrorSpec", "closed_form_error_fidelity", "direct_error_fidelity",
    "quadratic_coefficient", "sweep", "joint_quadratic_form",
    "arbitrary_phi_fidelity",
    "__version__",
]
