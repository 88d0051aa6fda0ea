import numpy as np
import pytest

from bosent import (
    Bipartition,
    DensityMatrix,
    block_decompose,
    enumerate_basis,
    is_block_diagonal,
    make_pure,
    negative_coherence_state,
    phase_state,
    to_density,
    totally_mixed,
)
from bosent.linalg import eig_hermitian
from conftest import random_block_diagonal, random_density_matrix


def test_block_diagonal_input_has_zero_residue(four_mode_n2):
    rng = np.random.default_rng(1)
    rho = random_block_diagonal(four_mode_n2, rng)
    dec = block_decompose(rho)
    assert dec.nonblock_linf() == 0.0
    assert is_block_diagonal(rho)


def test_phase_state_weights_and_scalar_blocks(two_mode_n3):
    rho = to_density(phase_state(two_mode_n3, np.array([0.2, 1.0, -0.5, 0.0])))
    dec = block_decompose(rho)
    assert np.allclose(dec.weights, 1 / 4)
    for block in dec.blocks:
        assert block.shape == (1, 1)
        assert block[0, 0] == pytest.approx(1.0)


def test_fock_vector_occupies_single_sector(four_mode_n2):
    amps = np.zeros(10)
    amps[four_mode_n2.flat_index(1, 1, 1)] = 1.0
    rho = to_density(make_pure(four_mode_n2, amps))
    dec = block_decompose(rho)
    assert np.allclose(dec.weights, [0.0, 1.0, 0.0], atol=1e-14)
    assert dec.blocks[0] is None and dec.blocks[2] is None


def test_is_block_diagonal_examples(two_mode_n2):
    assert is_block_diagonal(totally_mixed(two_mode_n2))
    assert not is_block_diagonal(to_density(phase_state(two_mode_n2)))
    assert not is_block_diagonal(negative_coherence_state(two_mode_n2))


def test_reassembly_and_weight_sum(four_mode_n2):
    rng = np.random.default_rng(2)
    for _ in range(5):
        rho = random_density_matrix(four_mode_n2, rng)
        dec = block_decompose(rho)
        assert np.max(np.abs(dec.block_part + dec.nonblock_part - rho.mat)) < 1e-14
        assert np.max(np.abs(dec.diag_part + dec.offdiag_part - rho.mat)) < 1e-14
        assert np.sum(dec.weights) == pytest.approx(1.0, abs=1e-10)
        assert np.trace(dec.block_part).real == pytest.approx(1.0, abs=1e-10)


def test_block_part_is_psd_with_unit_trace_blocks(four_mode_n2):
    rng = np.random.default_rng(3)
    rho = random_density_matrix(four_mode_n2, rng)
    dec = block_decompose(rho)
    vals, _ = eig_hermitian(dec.block_part)
    assert vals[0] >= -1e-12
    for k, block in enumerate(dec.blocks):
        if block is None:
            continue
        assert np.trace(block).real == pytest.approx(1.0, abs=1e-12)
        bvals, _ = eig_hermitian(block)
        assert bvals[0] >= -1e-12


def test_two_mode_blocks_equal_diagonal(two_mode_n3):
    rng = np.random.default_rng(4)
    rho = random_density_matrix(two_mode_n3, rng)
    dec = block_decompose(rho)
    assert np.max(np.abs(dec.block_part - dec.diag_part)) < 1e-15
    assert np.max(np.abs(dec.nonblock_part - dec.offdiag_part)) < 1e-15


def test_report_json(four_mode_n2):
    rng = np.random.default_rng(5)
    rho = random_density_matrix(four_mode_n2, rng)
    data = block_decompose(rho).to_json_dict()
    assert len(data["p"]) == 3
    assert data["block_dims"] == [[1, 3], [2, 2], [3, 1]]
    assert data["nb_linf"] > 0


def test_block_diagonal_tolerance_is_relative():
    basis = enumerate_basis(Bipartition(N=1, M=2, m=1))
    mat = np.diag([0.5, 0.5]).astype(complex)
    mat[0, 1] = mat[1, 0] = 1e-14
    rho = DensityMatrix(basis=basis, mat=mat)
    assert is_block_diagonal(rho)
    assert not is_block_diagonal(rho, tol=1e-16)
