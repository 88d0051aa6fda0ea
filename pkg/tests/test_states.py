import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bosent import (
    Bipartition,
    DensityMatrix,
    enumerate_basis,
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
from bosent.linalg import ValidationError, eig_hermitian
from conftest import random_density_matrix


def test_make_pure_fock_vector(two_mode_n2):
    amps = np.zeros(3)
    amps[1] = 1.0
    rho = to_density(make_pure(two_mode_n2, amps))
    expected = np.zeros((3, 3))
    expected[1, 1] = 1.0
    assert np.allclose(rho.mat, expected)


def test_make_pure_balanced_single_particle():
    basis = enumerate_basis(Bipartition(N=1, M=2, m=1))
    rho = to_density(make_pure(basis, [1 / np.sqrt(2), 1 / np.sqrt(2)]))
    assert np.allclose(rho.mat, np.full((2, 2), 0.5))


def test_make_pure_renormalizes_near_unit_input(two_mode_n2):
    amps = np.array([1.0, 1.0, 1.0]) / np.sqrt(3) * (1 + 5e-7)
    psi = make_pure(two_mode_n2, amps)
    assert np.linalg.norm(psi.amplitudes) == pytest.approx(1.0, abs=1e-14)


def test_make_pure_rejects_zero_and_far_from_normalized(two_mode_n2):
    with pytest.raises(ValidationError):
        make_pure(two_mode_n2, np.zeros(3))
    with pytest.raises(ValidationError):
        make_pure(two_mode_n2, np.array([1.0, 1.0, 1.0]))


def test_totally_mixed(two_mode_n2, four_mode_n2):
    rho = totally_mixed(two_mode_n2)
    assert np.allclose(rho.mat, np.diag([1 / 3, 1 / 3, 1 / 3]))
    assert np.trace(totally_mixed(four_mode_n2).mat) == pytest.approx(1.0, abs=0)


def test_phase_state_outer_product_oracle(two_mode_n2):
    phases = np.array([0.1, 0.7, -2.0])
    rho = to_density(phase_state(two_mode_n2, phases))
    # direct outer product of e^{i phi_k} / sqrt(3)
    v = np.exp(1j * phases) / np.sqrt(3)
    assert np.max(np.abs(rho.mat - np.outer(v, v.conj()))) < 1e-15
    assert np.allclose(np.diag(rho.mat), 1 / 3)


def test_phase_state_uniform_when_phases_zero(two_mode_n2):
    psi = phase_state(two_mode_n2)
    assert np.allclose(psi.amplitudes, 1 / np.sqrt(3))


def test_phase_state_offdiagonal_structure(two_mode_n3):
    N = 3
    phases = np.array([0.0, 0.4, 1.3, -0.2])
    rho = to_density(phase_state(two_mode_n3, phases))
    phase_matrix = np.exp(1j * np.subtract.outer(phases, phases))
    offdiag = rho.mat - np.diag(np.diag(rho.mat))
    assert np.max(np.abs(offdiag - (phase_matrix - np.eye(N + 1)) / (N + 1))) < 1e-14
    # most negative eigenvalue of minus the off-diagonal part has modulus N/(N+1)
    vals, _ = eig_hermitian(-offdiag)
    assert vals[0] == pytest.approx(-N / (N + 1), abs=1e-12)


def test_phase_state_needs_two_modes(four_mode_n2):
    with pytest.raises(ValidationError):
        phase_state(four_mode_n2)


def test_negative_coherence_state_entries(two_mode_n2):
    rho = negative_coherence_state(two_mode_n2)
    assert np.allclose(np.diag(rho.mat), 1 / 3)
    off = rho.mat[~np.eye(3, dtype=bool)]
    assert np.allclose(off, -1 / 6)


def test_negative_coherence_state_is_psd_boundary(two_mode_n3):
    rho = negative_coherence_state(two_mode_n3)
    vals, _ = eig_hermitian(rho.mat)
    assert vals[0] == pytest.approx(0.0, abs=1e-12)


def test_negative_coherence_offdiag_identity(two_mode_n3):
    N = 3
    rho = negative_coherence_state(two_mode_n3)
    offdiag = rho.mat - np.diag(np.diag(rho.mat))
    all_ones = np.ones((N + 1, N + 1))
    assert np.max(np.abs(offdiag - (np.eye(N + 1) - all_ones) / (N * (N + 1)))) < 1e-15


def test_maximally_entangled_two_mode_is_uniform(two_mode_n2):
    psi = maximally_entangled(two_mode_n2)
    assert np.allclose(psi.amplitudes, 1 / np.sqrt(3))
    assert schmidt_count(two_mode_n2) == 3


def test_maximally_entangled_pairing(four_mode_n2):
    psi = maximally_entangled(four_mode_n2)
    d_tot = schmidt_count(four_mode_n2)
    assert d_tot == 4
    support = np.flatnonzero(np.abs(psi.amplitudes) > 0)
    assert len(support) == d_tot
    assert np.allclose(np.abs(psi.amplitudes[support]), 1 / np.sqrt(d_tot))
    labels = [four_mode_n2.label_of(i) for i in support]
    assert all(s == sp for _, s, sp in labels)


def test_werner_endpoints(two_mode_n2):
    psi = maximally_entangled(two_mode_n2)
    assert np.allclose(werner_like(two_mode_n2, 0.0, psi).mat, totally_mixed(two_mode_n2).mat)
    assert np.allclose(werner_like(two_mode_n2, 1.0, psi).mat, to_density(psi).mat)


def test_werner_rejects_bad_p(two_mode_n2):
    psi = maximally_entangled(two_mode_n2)
    with pytest.raises(ValidationError):
        werner_like(two_mode_n2, -0.1, psi)
    with pytest.raises(ValidationError):
        werner_like(two_mode_n2, 1.5, psi)


@given(st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=30, deadline=None)
def test_werner_affine_in_p(p):
    basis = enumerate_basis(Bipartition(N=2, M=2, m=1))
    psi = maximally_entangled(basis)
    lo = werner_like(basis, 0.0, psi).mat
    hi = werner_like(basis, 1.0, psi).mat
    mid = werner_like(basis, p, psi).mat
    assert np.max(np.abs(mid - (p * hi + (1 - p) * lo))) < 1e-12


def test_density_matrix_validation(two_mode_n2):
    bad = np.diag([0.5, 0.3, 0.1]).astype(complex)  # trace 0.9
    with pytest.raises(ValidationError, match="trace"):
        DensityMatrix(basis=two_mode_n2, mat=bad)
    bad = np.diag([1.1, -0.1, 0.0]).astype(complex)  # negative eigenvalue
    with pytest.raises(ValidationError, match="positive"):
        DensityMatrix(basis=two_mode_n2, mat=bad)


def test_superselection_single_component(two_mode_n2):
    rho = totally_mixed(two_mode_n2)
    mix = superselection_mixture([(1.0, rho)])
    assert mix.components == (rho,)


def test_superselection_two_sectors():
    b1 = enumerate_basis(Bipartition(N=1, M=2, m=1))
    b2 = enumerate_basis(Bipartition(N=2, M=2, m=1))
    mix = superselection_mixture([(0.5, totally_mixed(b1)), (0.5, totally_mixed(b2))])
    assert len(mix.components) == 2


def test_superselection_validation():
    b1 = enumerate_basis(Bipartition(N=1, M=2, m=1))
    b2 = enumerate_basis(Bipartition(N=2, M=4, m=2))
    with pytest.raises(ValidationError, match="sum"):
        superselection_mixture([(0.4, totally_mixed(b1)), (0.4, totally_mixed(b1))])
    with pytest.raises(ValidationError, match=r"\(M, m\)"):
        superselection_mixture([(0.5, totally_mixed(b1)), (0.5, totally_mixed(b2))])


def test_random_density_matrices_pass_invariants(four_mode_n2):
    rng = np.random.default_rng(0)
    for _ in range(5):
        rho = random_density_matrix(four_mode_n2, rng)
        assert np.trace(rho.mat).real == pytest.approx(1.0, abs=1e-12)
