"""Golden self-check: the closed-form values this library is built around."""

from __future__ import annotations

import math
from math import comb

import numpy as np

from .entanglement import negativity, reduced_state, is_separable
from .fock import Bipartition, enumerate_basis
from .linalg import eig_hermitian
from .modes import balanced_beamsplitter, induced_unitary, random_mode_unitary, transform_state
from .robustness import rg_bound_l1, rg_bound_spectral, robustness_standard
from .states import (
    maximally_entangled,
    negative_coherence_state,
    phase_state,
    schmidt_count,
    to_density,
    totally_mixed,
    werner_like,
)


def _check_dimension_identity() -> None:
    for N in range(1, 5):
        for M in range(2, 5):
            for m in range(1, M):
                basis = enumerate_basis(Bipartition(N=N, M=M, m=m))
                total = sum(d1 * d2 for d1, d2 in basis.sector_dims())
                assert total == comb(N + M - 1, N) == basis.dim


def _check_all_ones_spectrum() -> None:
    N = 3
    vals, _ = eig_hermitian(np.ones((N + 1, N + 1), dtype=complex))
    assert np.allclose(vals, [0, 0, 0, N + 1], atol=1e-9)


def _check_phase_state_offdiag() -> None:
    N = 3
    basis = enumerate_basis(Bipartition(N=N, M=2, m=1))
    phases = np.linspace(0.0, 2.0, N + 1)
    rho = to_density(phase_state(basis, phases))
    expected = (np.exp(1j * np.subtract.outer(phases, phases)) - np.eye(N + 1)) / (N + 1)
    offdiag = rho.mat - np.diag(np.diag(rho.mat))
    assert np.max(np.abs(offdiag - expected)) < 1e-12


def _check_phase_state_bounds() -> None:
    N = 3
    basis = enumerate_basis(Bipartition(N=N, M=2, m=1))
    rho = to_density(phase_state(basis))
    assert abs(rg_bound_spectral(rho) - N) < 1e-9
    nb, nd = rg_bound_l1(rho)
    assert abs(nb - N) < 1e-9 and abs(nd - N) < 1e-9


def _check_negative_coherence_bounds() -> None:
    N = 3
    basis = enumerate_basis(Bipartition(N=N, M=2, m=1))
    rho = negative_coherence_state(basis)
    assert abs(rg_bound_spectral(rho) - 1.0 / N) < 1e-9
    _, nd = rg_bound_l1(rho)
    assert abs(nd - 1.0) < 1e-9


def _check_max_ent_negativity() -> None:
    basis = enumerate_basis(Bipartition(N=2, M=4, m=2))
    psi = maximally_entangled(basis)
    d_tot = schmidt_count(basis)
    assert d_tot == sum(min(d1, d2) for d1, d2 in basis.sector_dims()) == 4
    assert abs(negativity(to_density(psi)) - (d_tot - 1) / 2) < 1e-9


def _check_infinite_robustness() -> None:
    basis = enumerate_basis(Bipartition(N=2, M=2, m=1))
    report = robustness_standard(to_density(phase_state(basis)))
    assert report.value is not None and math.isinf(report.value)


def _check_pure_block_mixture() -> None:
    basis = enumerate_basis(Bipartition(N=2, M=4, m=2))
    rng = np.random.default_rng(7)
    mat = np.zeros((basis.dim, basis.dim), dtype=complex)
    weights = rng.dirichlet(np.ones(basis.N + 1))
    for k, sec in enumerate(basis.sectors):
        v = rng.normal(size=sec.dim) + 1j * rng.normal(size=sec.dim)
        v /= np.linalg.norm(v)
        start = basis.offsets[k]
        mat[start : start + sec.dim, start : start + sec.dim] = weights[k] * np.outer(v, v.conj())
    from .states import DensityMatrix

    rho = DensityMatrix(basis=basis, mat=mat)
    report = robustness_standard(rho)
    assert abs(report.value - negativity(rho)) < 1e-6


def _check_beamsplitter_column() -> None:
    basis = enumerate_basis(Bipartition(N=2, M=2, m=1))
    gamma = induced_unitary(balanced_beamsplitter(), basis)
    col = gamma[:, basis.index_of_occupation((1, 1))]
    expected = np.zeros(3, dtype=complex)
    expected[basis.index_of_occupation((2, 0))] = 1 / np.sqrt(2)
    expected[basis.index_of_occupation((0, 2))] = -1 / np.sqrt(2)
    assert np.max(np.abs(col - expected)) < 1e-10


def _check_mixed_state_invariance() -> None:
    basis = enumerate_basis(Bipartition(N=2, M=3, m=1))
    rho = totally_mixed(basis)
    rng = np.random.default_rng(11)
    out = transform_state(rho, random_mode_unitary(3, rng))
    assert np.max(np.abs(out.mat - rho.mat)) < 1e-12


def _check_reduced_entropy_purity() -> None:
    basis = enumerate_basis(Bipartition(N=2, M=2, m=1))
    rho = to_density(maximally_entangled(basis))
    red = reduced_state(rho, "first")
    d_tot = schmidt_count(basis)
    assert abs(red.entropy - np.log(d_tot)) < 1e-9
    assert abs(red.purity - 1.0 / d_tot) < 1e-9


def _check_werner_no_threshold() -> None:
    basis = enumerate_basis(Bipartition(N=2, M=2, m=1))
    rho = werner_like(basis, 1e-6, maximally_entangled(basis))
    assert negativity(rho) > 1e-9
    assert is_separable(rho).status == "entangled"


GOLDEN_ITEMS = [
    ("sector dimensions sum to the binomial total", _check_dimension_identity),
    ("all-ones matrix has spectrum {0, N+1}", _check_all_ones_spectrum),
    ("phase state off-diagonal residue has the phase-difference form", _check_phase_state_offdiag),
    ("phase state: spectral and l1 bounds both equal N", _check_phase_state_bounds),
    ("negative-coherence state: bounds 1/N and 1", _check_negative_coherence_bounds),
    ("maximally entangled negativity is (Schmidt count - 1)/2", _check_max_ent_negativity),
    ("non-block-diagonal state has infinite standard robustness", _check_infinite_robustness),
    ("pure-block mixture robustness equals its negativity", _check_pure_block_mixture),
    ("beamsplitter sends |1,1> to (|2,0> - |0,2>)/sqrt(2)", _check_beamsplitter_column),
    ("identity-proportional state is invariant under mode mixing", _check_mixed_state_invariance),
    ("reduced state of max-ent: entropy ln(count), purity 1/count", _check_reduced_entropy_purity),
    ("werner mixture entangled at p = 1e-6", _check_werner_no_threshold),
]


def run_selfcheck(out=print) -> int:
    """Run every golden item; returns the number of failures."""
    failures = 0
    for name, check in GOLDEN_ITEMS:
        try:
            check()
        except Exception as err:  # report and keep going
            failures += 1
            out(f"FAIL  {name}  ({err})")
        else:
            out(f"ok    {name}")
    out(f"{len(GOLDEN_ITEMS) - failures}/{len(GOLDEN_ITEMS)} checks passed")
    return failures
