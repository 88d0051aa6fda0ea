import numpy as np
import pytest

from bosent import Bipartition, DensityMatrix, enumerate_basis


def random_pure_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_density_matrix(basis, rng: np.random.Generator, rank: int | None = None) -> DensityMatrix:
    rank = rank or basis.dim
    G = rng.normal(size=(basis.dim, rank)) + 1j * rng.normal(size=(basis.dim, rank))
    mat = G @ G.conj().T
    mat /= np.trace(mat).real
    return DensityMatrix(basis=basis, mat=mat)


def random_block_diagonal(basis, rng: np.random.Generator, pure_blocks: bool = False) -> DensityMatrix:
    mat = np.zeros((basis.dim, basis.dim), dtype=complex)
    weights = rng.dirichlet(np.ones(basis.N + 1))
    for k, sec in enumerate(basis.sectors):
        start, dim = basis.offsets[k], sec.dim
        if pure_blocks:
            v = random_pure_vector(dim, rng)
            block = np.outer(v, v.conj())
        else:
            G = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            block = G @ G.conj().T
            block /= np.trace(block).real
        mat[start : start + dim, start : start + dim] = weights[k] * block
    return DensityMatrix(basis=basis, mat=mat)


@pytest.fixture
def two_mode_n2():
    return enumerate_basis(Bipartition(N=2, M=2, m=1))


@pytest.fixture
def two_mode_n3():
    return enumerate_basis(Bipartition(N=3, M=2, m=1))


@pytest.fixture
def four_mode_n2():
    return enumerate_basis(Bipartition(N=2, M=4, m=2))
