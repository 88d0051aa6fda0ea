from math import factorial, sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bosent import (
    Bipartition,
    DensityMatrix,
    ModeUnitary,
    balanced_beamsplitter,
    enumerate_basis,
    induced_unitary,
    is_separable,
    make_pure,
    negativity,
    random_mode_unitary,
    to_density,
    totally_mixed,
    transform_pure,
    transform_state,
)
from bosent.linalg import ValidationError, eig_hermitian


def symbolic_expansion_column(U, basis, occ):
    """Oracle: expand the transformed creation polynomial in commuting symbols.

    Monomials are dictionaries occupation -> coefficient; applying the mixed
    combination for mode i means multiplying by (sum_j U[j, i] x_j) n_i times.
    The amplitude on |t> is coeff(t) * sqrt(prod t_j!) / sqrt(prod n_i!).
    """
    M = basis.M
    poly = {tuple(0 for _ in range(M)): 1.0 + 0.0j}
    for i, n_i in enumerate(occ):
        for _ in range(n_i):
            new = {}
            for mono, coeff in poly.items():
                for j in range(M):
                    lifted = list(mono)
                    lifted[j] += 1
                    key = tuple(lifted)
                    new[key] = new.get(key, 0.0) + coeff * U[j, i]
            poly = new
    norm_in = sqrt(np.prod([factorial(n) for n in occ]))
    col = np.zeros(basis.dim, dtype=complex)
    for mono, coeff in poly.items():
        norm_out = sqrt(np.prod([factorial(t) for t in mono]))
        col[basis.index_of_occupation(mono)] = coeff * norm_out / norm_in
    return col


def test_beamsplitter_is_unitary_and_self_inverse():
    bs = balanced_beamsplitter()
    assert np.max(np.abs(bs.U @ bs.U - np.eye(2))) < 1e-15
    assert np.max(np.abs(bs.U.conj().T @ bs.U - np.eye(2))) < 1e-15


def test_mode_unitary_rejects_non_unitary():
    with pytest.raises(ValidationError, match="unitary"):
        ModeUnitary(M=2, U=np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_identity_lifts_to_identity(two_mode_n3):
    gamma = induced_unitary(ModeUnitary(M=2, U=np.eye(2)), two_mode_n3)
    assert np.max(np.abs(gamma - np.eye(4))) < 1e-14


def test_single_particle_sector_equals_mode_matrix():
    basis = enumerate_basis(Bipartition(N=1, M=2, m=1))
    bs = balanced_beamsplitter()
    gamma = induced_unitary(bs, basis)
    # basis order is (0,1), (1,0); mode matrix indices are (mode1, mode2)
    perm = [basis.index_of_occupation((1, 0)), basis.index_of_occupation((0, 1))]
    assert np.max(np.abs(gamma[np.ix_(perm, perm)] - bs.U)) < 1e-14
    psi = make_pure(basis, np.eye(2)[basis.index_of_occupation((1, 0))])
    out = transform_pure(psi, bs)
    assert out.amplitudes[basis.index_of_occupation((1, 0))] == pytest.approx(1 / np.sqrt(2))
    assert out.amplitudes[basis.index_of_occupation((0, 1))] == pytest.approx(1 / np.sqrt(2))


def test_beamsplitter_splits_one_one(two_mode_n2):
    gamma = induced_unitary(balanced_beamsplitter(), two_mode_n2)
    col = gamma[:, two_mode_n2.index_of_occupation((1, 1))]
    expected = np.zeros(3, dtype=complex)
    expected[two_mode_n2.index_of_occupation((2, 0))] = 1 / np.sqrt(2)
    expected[two_mode_n2.index_of_occupation((0, 2))] = -1 / np.sqrt(2)
    assert np.max(np.abs(col - expected)) < 1e-10


def test_beamsplitter_applied_twice_is_identity(two_mode_n2):
    rng = np.random.default_rng(0)
    probs = rng.dirichlet(np.ones(3))
    rho = DensityMatrix(basis=two_mode_n2, mat=np.diag(probs).astype(complex))
    bs = balanced_beamsplitter()
    back = transform_state(transform_state(rho, bs), bs)
    assert np.max(np.abs(back.mat - rho.mat)) < 1e-12


@pytest.mark.parametrize("N,M", [(3, 2), (2, 3)])
def test_induced_unitary_matches_symbolic_oracle(N, M):
    basis = enumerate_basis(Bipartition(N=N, M=M, m=1))
    rng = np.random.default_rng(42)
    mode_u = random_mode_unitary(M, rng)
    gamma = induced_unitary(mode_u, basis)
    for col in range(basis.dim):
        oracle = symbolic_expansion_column(mode_u.U, basis, basis.occupation_of(col))
        assert np.max(np.abs(gamma[:, col] - oracle)) < 1e-12


def test_beamsplitter_columns_match_oracle(two_mode_n2):
    bs = balanced_beamsplitter()
    gamma = induced_unitary(bs, two_mode_n2)
    for col in range(3):
        oracle = symbolic_expansion_column(bs.U, two_mode_n2, two_mode_n2.occupation_of(col))
        assert np.max(np.abs(gamma[:, col] - oracle)) < 1e-12


@given(st.integers(min_value=0, max_value=500))
@settings(max_examples=20, deadline=None)
def test_functoriality(seed):
    basis = enumerate_basis(Bipartition(N=3, M=2, m=1))
    rng = np.random.default_rng(seed)
    U = random_mode_unitary(2, rng)
    V = random_mode_unitary(2, rng)
    gamma_u = induced_unitary(U, basis)
    gamma_v = induced_unitary(V, basis)
    gamma_uv = induced_unitary(ModeUnitary(M=2, U=U.U @ V.U), basis)
    assert np.max(np.abs(gamma_u @ gamma_v - gamma_uv)) < 1e-8


@given(st.integers(min_value=0, max_value=500))
@settings(max_examples=15, deadline=None)
def test_induced_unitarity(seed):
    basis = enumerate_basis(Bipartition(N=2, M=3, m=1))
    rng = np.random.default_rng(seed)
    gamma = induced_unitary(random_mode_unitary(3, rng), basis)
    assert np.max(np.abs(gamma.conj().T @ gamma - np.eye(basis.dim))) < 1e-9


def test_spectrum_preserved(four_mode_n2):
    rng = np.random.default_rng(1)
    G = rng.normal(size=(10, 4)) + 1j * rng.normal(size=(10, 4))
    mat = G @ G.conj().T
    mat /= np.trace(mat).real
    rho = DensityMatrix(basis=four_mode_n2, mat=mat)
    out = transform_state(rho, random_mode_unitary(4, rng))
    v1, _ = eig_hermitian(rho.mat)
    v2, _ = eig_hermitian(out.mat)
    assert np.max(np.abs(v1 - v2)) < 1e-9
    assert np.trace(out.mat).real == pytest.approx(1.0, abs=1e-12)


def test_totally_mixed_invariant(two_mode_n3):
    rho = totally_mixed(two_mode_n3)
    rng = np.random.default_rng(2)
    for _ in range(5):
        out = transform_state(rho, random_mode_unitary(2, rng))
        assert np.max(np.abs(out.mat - rho.mat)) < 1e-12


def test_beamsplitter_entangles_nondegenerate_diagonal(two_mode_n2):
    rng = np.random.default_rng(3)
    bs = balanced_beamsplitter()
    for _ in range(5):
        probs = np.sort(rng.dirichlet(np.ones(3)))[::-1]
        assert probs[0] - probs[1] > 1e-3 or probs[1] - probs[2] > 1e-3
        rho = DensityMatrix(basis=two_mode_n2, mat=np.diag(probs).astype(complex))
        moved = transform_state(rho, bs)
        verdict = is_separable(moved)
        assert verdict.status == "entangled"
        assert negativity(moved) > 0


def test_pure_fock_state_transforms_to_expansion(two_mode_n2):
    bs = balanced_beamsplitter()
    psi = make_pure(two_mode_n2, np.eye(3)[two_mode_n2.index_of_occupation((2, 0))])
    out = transform_pure(psi, bs)
    gamma = induced_unitary(bs, two_mode_n2)
    expected = gamma[:, two_mode_n2.index_of_occupation((2, 0))]
    assert np.max(np.abs(out.amplitudes - expected)) < 1e-12
