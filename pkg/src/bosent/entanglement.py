"""Partial transposition on the embedded tensor product, negativity, Schmidt data,
separability verdicts and reduced states.

The N-particle space is not itself a tensor product, but each sector k is
isomorphic to C^{D_k} x C^{D_{N-k}} and the sectors embed into disjoint
row/column blocks of one C^A x C^B grid.  Partial transposition acts on the
second factor of that grid; cross-sector coherences then land outside the
original sector structure, which is exactly why non-block-diagonal states can
never pass the positivity test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import BLOCK_DIAG_TOL, block_decompose, is_block_diagonal
from .fock import DEFAULT_DIM_CAP, BasisTable
from .linalg import ValidationError, eig_hermitian, trace_norm
from .states import DensityMatrix, PureState

NEGATIVITY_CLAMP = 1e-12
BLOCK_NPT_TOL = 1e-9


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Per-sector Schmidt coefficients of a pure state, nonincreasing in each block."""

    by_block: tuple[tuple[float, ...], ...]

    @property
    def coefficients(self) -> np.ndarray:
        return np.concatenate([np.asarray(c) for c in self.by_block]) if self.by_block else np.zeros(0)

    @property
    def total_count(self) -> int:
        return sum(len(c) for c in self.by_block)

    def nonzero_count(self, tol: float = 1e-12) -> int:
        return int(np.sum(self.coefficients > tol))


@dataclass(frozen=True)
class SeparabilityVerdict:
    status: str               # "separable" | "entangled" | "undetermined"
    exact: bool               # whether the positivity test is known-exact here
    reasons: tuple[str, ...]  # "non-block-diagonal" | "block-NPT" | "all-blocks-PPT"


def embed(rho: DensityMatrix) -> np.ndarray:
    """Place rho on the A x B grid; cells outside the embedded image stay zero."""
    basis = rho.basis
    a, b = basis.a_dim, basis.b_dim
    rows = np.empty(basis.dim, dtype=int)
    for flat in range(basis.dim):
        i, j = basis.embed_index(*basis.label_of(flat))
        rows[flat] = i * b + j
    out = np.zeros((a * b, a * b), dtype=complex)
    out[np.ix_(rows, rows)] = rho.mat
    return out


def partial_transpose(rho: DensityMatrix, cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Embedded matrix with the second tensor factor transposed."""
    basis = rho.basis
    a, b = basis.a_dim, basis.b_dim
    if a * b > cap:
        raise ValidationError(f"embedded dimension {a * b} exceeds cap {cap}")
    emb = embed(rho).reshape(a, b, a, b)
    return emb.transpose(0, 3, 2, 1).reshape(a * b, a * b)


def negativity(rho: DensityMatrix, cap: int = DEFAULT_DIM_CAP) -> float:
    """(trace norm of the partial transpose - 1) / 2, clamped at zero."""
    value = 0.5 * (trace_norm(partial_transpose(rho, cap=cap)) - 1.0)
    return value if value > NEGATIVITY_CLAMP else 0.0


def schmidt(psi: PureState) -> SchmidtSpectrum:
    """Singular values of each sector's coefficient matrix psi_{k s s'}."""
    basis = psi.basis
    by_block = []
    for k, sec in enumerate(basis.sectors):
        start = basis.offsets[k]
        coeff = psi.amplitudes[start : start + sec.dim].reshape(sec.dim_first, sec.dim_second)
        svals = np.linalg.svd(coeff, compute_uv=False)
        by_block.append(tuple(float(s) for s in svals))
    return SchmidtSpectrum(by_block=tuple(by_block))


def negativity_from_schmidt(spectrum: SchmidtSpectrum) -> float:
    """((sum of all Schmidt coefficients)^2 - 1) / 2 for a pure state."""
    total = float(np.sum(spectrum.coefficients))
    value = 0.5 * (total * total - 1.0)
    return value if value > NEGATIVITY_CLAMP else 0.0


def block_partial_transpose(block: np.ndarray, dims: tuple[int, int]) -> np.ndarray:
    d1, d2 = dims
    return block.reshape(d1, d2, d1, d2).transpose(0, 3, 2, 1).reshape(d1 * d2, d1 * d2)


def block_is_ppt(block: np.ndarray, dims: tuple[int, int], tol: float = BLOCK_NPT_TOL) -> bool:
    vals, _ = eig_hermitian(block_partial_transpose(block, dims))
    return bool(vals[0] >= -tol)


def ppt_exactness_regime(basis: BasisTable, weights) -> bool:
    """Whether all-blocks-PPT certifies separability for this instance.

    Holds for two modes, for single-mode-versus-rest splits, and whenever every
    occupied block is at most 2 x 3 (where positivity of the partial transpose
    is decisive).
    """
    if basis.M == 2 or basis.m == 1 or basis.m == basis.M - 1:
        return True
    for k, sec in enumerate(basis.sectors):
        if weights[k] <= 1e-12:
            continue
        lo, hi = sorted((sec.dim_first, sec.dim_second))
        if lo > 2 or hi > 3:
            return False
    return True


def is_separable(rho: DensityMatrix, tol: float = BLOCK_DIAG_TOL) -> SeparabilityVerdict:
    """Verdict from the sector structure plus per-block positivity tests."""
    if not is_block_diagonal(rho, tol=tol):
        return SeparabilityVerdict(status="entangled", exact=True, reasons=("non-block-diagonal",))
    dec = block_decompose(rho)
    for k, block in enumerate(dec.blocks):
        if block is None:
            continue
        sec = rho.basis.sectors[k]
        if not block_is_ppt(block, (sec.dim_first, sec.dim_second)):
            return SeparabilityVerdict(status="entangled", exact=True, reasons=("block-NPT",))
    if ppt_exactness_regime(rho.basis, dec.weights):
        return SeparabilityVerdict(status="separable", exact=True, reasons=("all-blocks-PPT",))
    return SeparabilityVerdict(status="undetermined", exact=False, reasons=("all-blocks-PPT",))


@dataclass(frozen=True)
class ReducedState:
    matrix: np.ndarray
    entropy: float
    purity: float


def reduced_state(rho: DensityMatrix, side: str = "first") -> ReducedState:
    """Partial trace of the embedded state over the other factor.

    Entropy is von Neumann with natural log (0 ln 0 = 0); purity is Tr r^2.
    """
    if side not in ("first", "second"):
        raise ValidationError(f"side must be 'first' or 'second', got {side!r}")
    basis = rho.basis
    a, b = basis.a_dim, basis.b_dim
    emb = embed(rho).reshape(a, b, a, b)
    red = np.einsum("ibjb->ij", emb) if side == "first" else np.einsum("aiaj->ij", emb)
    vals, _ = eig_hermitian(red)
    pos = vals[vals > 1e-15]
    entropy = float(-np.sum(pos * np.log(pos)))
    purity = float(np.sum(vals * vals))
    return ReducedState(matrix=red, entropy=entropy, purity=purity)


def analyze(rho: DensityMatrix) -> dict:
    """Negativity, verdict and first-side reduced-state report, as CLI JSON."""
    verdict = is_separable(rho)
    red = reduced_state(rho, "first")
    return {
        "negativity": negativity(rho),
        "verdict": verdict.status,
        "exact": verdict.exact,
        "reasons": list(verdict.reasons),
        "entropy_first": red.entropy,
        "purity_first": red.purity,
    }


def pure_negativity(psi: PureState) -> float:
    return negativity_from_schmidt(schmidt(psi))
