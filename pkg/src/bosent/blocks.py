"""Sector-block structure of a state: weights, normalized blocks, residues."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import DensityMatrix

EMPTY_BLOCK_TOL = 1e-12
BLOCK_DIAG_TOL = 1e-12


@dataclass(frozen=True)
class BlockDecomposition:
    """rho = block_part + nonblock_part = diag_part + offdiag_part.

    weights[k] is the trace of the k-sector principal submatrix; blocks[k] is
    that submatrix renormalized to unit trace, or None when the weight is
    below EMPTY_BLOCK_TOL.
    """

    source: DensityMatrix
    weights: np.ndarray
    blocks: tuple
    block_part: np.ndarray
    nonblock_part: np.ndarray
    diag_part: np.ndarray
    offdiag_part: np.ndarray

    def nonblock_linf(self) -> float:
        return float(np.max(np.abs(self.nonblock_part))) if self.nonblock_part.size else 0.0

    def block_dims(self) -> list[tuple[int, int]]:
        return self.source.basis.sector_dims()

    def to_json_dict(self) -> dict:
        return {
            "p": [float(w) for w in self.weights],
            "block_dims": [list(d) for d in self.block_dims()],
            "nb_linf": self.nonblock_linf(),
        }


def block_decompose(rho: DensityMatrix) -> BlockDecomposition:
    basis = rho.basis
    mat = rho.mat
    block_part = np.zeros_like(mat)
    weights = np.zeros(basis.N + 1)
    blocks = []
    for k, sec in enumerate(basis.sectors):
        start = basis.offsets[k]
        stop = start + sec.dim
        sub = mat[start:stop, start:stop]
        block_part[start:stop, start:stop] = sub
        p_k = float(np.trace(sub).real)
        weights[k] = p_k
        blocks.append(sub / p_k if p_k > EMPTY_BLOCK_TOL else None)
    diag_part = np.diag(np.diag(mat))
    return BlockDecomposition(
        source=rho,
        weights=weights,
        blocks=tuple(blocks),
        block_part=block_part,
        nonblock_part=mat - block_part,
        diag_part=diag_part,
        offdiag_part=mat - diag_part,
    )


def is_block_diagonal(rho: DensityMatrix, tol: float = BLOCK_DIAG_TOL) -> bool:
    """True iff no coherence between different particle-number sectors survives `tol`."""
    dec = block_decompose(rho)
    scale = 1.0 + float(np.max(np.abs(rho.mat)))
    return dec.nonblock_linf() <= tol * scale
