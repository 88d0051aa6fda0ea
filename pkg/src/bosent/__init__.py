"""Bipartite entanglement of N bosons in M modes under mode bipartitions:
basis enumeration, negativity, robustness bounds and state-space geometry probes."""

from .fock import Bipartition, BasisTable, enumerate_basis, total_dim, two_mode_basis
from .states import (
    DensityMatrix,
    PureState,
    SectoredState,
    make_pure,
    maximally_entangled,
    negative_coherence_state,
    phase_state,
    schmidt_count,
    superselection_mixture,
    to_density,
    totally_mixed,
    werner_like,
)
from .blocks import BlockDecomposition, block_decompose, is_block_diagonal
from .entanglement import (
    SchmidtSpectrum,
    SeparabilityVerdict,
    analyze,
    is_separable,
    negativity,
    negativity_from_schmidt,
    partial_transpose,
    reduced_state,
    schmidt,
)
from .linalg import ValidationError, eig_hermitian, l1_norm, trace_norm
from .modes import (
    ModeUnitary,
    balanced_beamsplitter,
    induced_unitary,
    random_mode_unitary,
    transform_pure,
    transform_state,
)
from .robustness import (
    RobustnessReport,
    SolverFailure,
    block_robustness,
    rg_bound_l1,
    rg_bound_spectral,
    robustness_generalized,
    robustness_standard,
    robustness_superselection,
)
from .geometry import bipartition_sweep, border_probe, werner_scan

__all__ = [
    "Bipartition",
    "BasisTable",
    "BlockDecomposition",
    "DensityMatrix",
    "ModeUnitary",
    "PureState",
    "RobustnessReport",
    "SchmidtSpectrum",
    "SectoredState",
    "SeparabilityVerdict",
    "SolverFailure",
    "ValidationError",
    "analyze",
    "balanced_beamsplitter",
    "bipartition_sweep",
    "block_decompose",
    "block_robustness",
    "border_probe",
    "eig_hermitian",
    "enumerate_basis",
    "induced_unitary",
    "is_block_diagonal",
    "is_separable",
    "l1_norm",
    "make_pure",
    "maximally_entangled",
    "negative_coherence_state",
    "negativity",
    "negativity_from_schmidt",
    "partial_transpose",
    "phase_state",
    "random_mode_unitary",
    "reduced_state",
    "rg_bound_l1",
    "rg_bound_spectral",
    "robustness_generalized",
    "robustness_standard",
    "robustness_superselection",
    "schmidt",
    "schmidt_count",
    "superselection_mixture",
    "to_density",
    "totally_mixed",
    "trace_norm",
    "transform_pure",
    "transform_state",
    "two_mode_basis",
    "werner_like",
    "werner_scan",
]
