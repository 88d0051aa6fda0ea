"""Robustness of entanglement under mixing, per sector block.

Mixing any state into a non-block-diagonal state can never restore the
block-diagonal form separability requires, so the standard robustness of such
states is infinite.  Block-diagonal states reduce to independent per-block
problems whose weighted sum is the answer; the generalized robustness of an
arbitrary state is sandwiched between its block part's value and two cheap
upper bounds (spectral and entrywise-l1).

Normalization: reported values are scaled so that a pure block's robustness
equals its negativity.  The minimal mixing weight itself (the trace of the
unnormalized mixing matrix) is twice the reported value; emitted witnesses
carry that raw weight, so (rho + sigma_tilde) / (1 + trace) is an actually
separable combination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import cvxpy as cp
import numpy as np

from .blocks import BLOCK_DIAG_TOL, BlockDecomposition, block_decompose, is_block_diagonal
from .entanglement import negativity_from_schmidt, SchmidtSpectrum
from .linalg import eig_hermitian, l1_norm
from .states import DensityMatrix, SectoredState

PURE_BLOCK_TOL = 1e-9
EXACT_MIN_DIM = 2
EXACT_MAX_DIM = 3
SOLVER_ITERATION_CAP = 10000


class SolverFailure(RuntimeError):
    """The convex program did not reach a certified optimum."""


@dataclass(frozen=True)
class BlockReport:
    k: int
    weight: float
    value: float
    method: str   # "pure_negativity" | "convex_oracle"
    exact: bool

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "p": self.weight,
            "value": self.value,
            "method": self.method,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class RobustnessReport:
    kind: str                      # "standard" | "generalized"
    value: float | None            # math.inf allowed; None when only an interval is certified
    status: str                    # "exact" | "lower_bound" | "bounds_only"
    per_block: tuple[BlockReport, ...] = ()
    interval: tuple[float, float] | None = None
    bounds: dict | None = None
    witness: tuple[np.ndarray, float] | None = None
    per_sector: tuple = ()

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind, "status": self.status}
        if self.value is None:
            out["value"] = None
        elif math.isinf(self.value):
            out["value"] = "inf"
        else:
            out["value"] = self.value
        if self.interval is not None:
            out["interval"] = list(self.interval)
        if self.bounds is not None:
            out["bounds"] = dict(self.bounds)
        if self.per_block:
            out["per_block"] = [b.to_json_dict() for b in self.per_block]
        if self.per_sector:
            out["per_sector"] = [
                {"weight": w, "report": rep.to_json_dict()} for w, rep in self.per_sector
            ]
        if self.witness is not None:
            sigma, weight = self.witness
            out["witness"] = {
                "trace": weight,
                "matrix": [[[z.real, z.imag] for z in row] for row in sigma],
            }
        return out


def _pure_block_schmidt(block: np.ndarray, dims: tuple[int, int]) -> np.ndarray:
    vals, vecs = eig_hermitian(block)
    psi = vecs[:, -1].reshape(dims)
    return np.linalg.svd(psi, compute_uv=False)


def _pure_block_witness(block: np.ndarray, dims: tuple[int, int]) -> tuple[np.ndarray, float]:
    """Analytic optimal mixing matrix for a pure block.

    In the Schmidt product basis the optimum is diagonal with entries
    a_i a_j on the mismatched pairs (i != j); its trace is the raw weight.
    """
    vals, vecs = eig_hermitian(block)
    psi = vecs[:, -1].reshape(dims)
    u, a, vh = np.linalg.svd(psi)
    d = min(dims)
    sigma = np.zeros((dims[0] * dims[1], dims[0] * dims[1]), dtype=complex)
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            vec = np.kron(u[:, i], vh[j, :])  # the state's own Schmidt pair (i, j)
            sigma += a[i] * a[j] * np.outer(vec, vec.conj())
    return sigma, float(np.sum(a) ** 2 - 1.0)


def solve_mixing_program(
    block: np.ndarray, dims: tuple[int, int], kind: str
) -> tuple[float, np.ndarray]:
    """Minimal trace of a positive mixing matrix restoring PT-positivity.

    The standard kind additionally requires the mixing matrix itself to stay
    positive under partial transposition.  Returns (raw trace, mixing matrix).
    """
    d1, d2 = dims
    d = d1 * d2
    sigma = cp.Variable((d, d), hermitian=True)
    constraints = [
        sigma >> 0,
        cp.partial_transpose(block + sigma, dims=[d1, d2], axis=1) >> 0,
    ]
    if kind == "standard":
        constraints.append(cp.partial_transpose(sigma, dims=[d1, d2], axis=1) >> 0)
    problem = cp.Problem(cp.Minimize(cp.real(cp.trace(sigma))), constraints)
    try:
        problem.solve(solver=cp.CLARABEL, max_iter=SOLVER_ITERATION_CAP)
    except cp.error.SolverError as err:
        raise SolverFailure(f"convex oracle failed on a {d1}x{d2} block: {err}") from err
    if problem.status != cp.OPTIMAL:
        raise SolverFailure(
            f"convex oracle ended with status {problem.status!r} on a {d1}x{d2} block "
            f"(objective {problem.value})"
        )
    return float(problem.value), np.asarray(sigma.value)


def block_robustness(
    block: np.ndarray,
    dims: tuple[int, int],
    kind: str = "standard",
    want_witness: bool = False,
) -> tuple[float, str, bool, np.ndarray | None]:
    """(value, method, exact, witness matrix or None) for one normalized block."""
    if kind not in ("standard", "generalized"):
        raise ValueError(f"kind must be 'standard' or 'generalized', got {kind!r}")
    d1, d2 = dims
    if min(d1, d2) == 1:
        # transposing a one-dimensional factor never breaks positivity, so the
        # program's optimum is identically zero
        witness = np.zeros((d1 * d2, d1 * d2), dtype=complex) if want_witness else None
        return 0.0, "convex_oracle", True, witness
    vals, _ = eig_hermitian(block)
    if vals[-1] >= 1.0 - PURE_BLOCK_TOL:
        svals = _pure_block_schmidt(block, dims)
        value = negativity_from_schmidt(SchmidtSpectrum(by_block=(tuple(svals),)))
        witness = _pure_block_witness(block, dims)[0] if want_witness else None
        return value, "pure_negativity", True, witness
    raw, sigma = solve_mixing_program(block, dims, kind)
    exact = min(d1, d2) <= EXACT_MIN_DIM and max(d1, d2) <= EXACT_MAX_DIM
    return max(0.0, raw) / 2.0, "convex_oracle", exact, (sigma if want_witness else None)


def _block_reports(
    rho: DensityMatrix,
    dec: BlockDecomposition,
    kind: str,
    want_witness: bool,
) -> tuple[tuple[BlockReport, ...], np.ndarray | None]:
    basis = rho.basis
    reports = []
    witness = np.zeros_like(rho.mat) if want_witness else None
    for k, block in enumerate(dec.blocks):
        if block is None:
            continue
        sec = basis.sectors[k]
        value, method, exact, sigma_k = block_robustness(
            block, (sec.dim_first, sec.dim_second), kind=kind, want_witness=want_witness
        )
        reports.append(BlockReport(k=k, weight=float(dec.weights[k]), value=value, method=method, exact=exact))
        if want_witness and sigma_k is not None:
            start = basis.offsets[k]
            stop = start + sec.dim
            witness[start:stop, start:stop] += dec.weights[k] * sigma_k
    return tuple(reports), witness


def rg_bound_spectral(rho: DensityMatrix) -> float:
    """D times the largest positive eigenvalue of the off-diagonal remainder.

    Adding that multiple of the identity to minus the off-diagonal part yields a
    positive mixing matrix whose admixture leaves only the (separable) diagonal.
    """
    dec = block_decompose(rho)
    vals, _ = eig_hermitian(dec.offdiag_part)
    lam = max(0.0, float(vals[-1]))
    return lam * rho.basis.dim


def rg_bound_l1(rho: DensityMatrix) -> tuple[float, float]:
    """(block-term + l1 of the non-block residue, l1 of the off-diagonal residue).

    Both come from diagonally-dominated mixing matrices; the second variant
    needs no per-block solve and is reported alongside the first.
    """
    dec = block_decompose(rho)
    reports, _ = _block_reports(rho, dec, kind="generalized", want_witness=False)
    block_term = sum(r.weight * r.value for r in reports)
    return block_term + l1_norm(dec.nonblock_part), l1_norm(dec.offdiag_part)


def offdiagonal_witness(rho: DensityMatrix) -> tuple[np.ndarray, float]:
    """Diagonally-dominated mixing matrix cancelling all off-diagonal entries.

    rho plus this matrix is diagonal in the Fock basis, hence separable; its
    trace equals the l1 norm of the off-diagonal remainder.
    """
    dec = block_decompose(rho)
    nd = dec.offdiag_part
    sigma = np.diag(np.sum(np.abs(nd), axis=1)).astype(complex) - nd
    return sigma, float(l1_norm(nd))


def robustness_standard(
    rho: DensityMatrix,
    tol: float = BLOCK_DIAG_TOL,
    emit_witness: bool = False,
) -> RobustnessReport:
    """Exact for block-diagonal states as a weighted block sum, infinite otherwise."""
    if not is_block_diagonal(rho, tol=tol):
        return RobustnessReport(kind="standard", value=math.inf, status="exact")
    dec = block_decompose(rho)
    reports, witness = _block_reports(rho, dec, kind="standard", want_witness=emit_witness)
    value = sum(r.weight * r.value for r in reports)
    status = "exact" if all(r.exact for r in reports) else "lower_bound"
    wit = (witness, float(np.trace(witness).real)) if emit_witness else None
    return RobustnessReport(kind="standard", value=value, status=status, per_block=reports, witness=wit)


def robustness_generalized(
    rho: DensityMatrix,
    tol: float = BLOCK_DIAG_TOL,
    emit_witness: bool = False,
) -> RobustnessReport:
    """Weighted block sum when block-diagonal, a certified sandwich otherwise."""
    dec = block_decompose(rho)
    block_diag = is_block_diagonal(rho, tol=tol)
    reports, block_witness = _block_reports(
        rho, dec, kind="generalized", want_witness=emit_witness and block_diag
    )
    block_term = sum(r.weight * r.value for r in reports)

    spectral = rg_bound_spectral(rho)
    l1_nb = block_term + l1_norm(dec.nonblock_part)
    l1_nd = l1_norm(dec.offdiag_part)
    bounds = {"lambda_D": spectral, "l1": l1_nb, "l1_nd": l1_nd}

    if block_diag:
        status = "exact" if all(r.exact for r in reports) else "lower_bound"
        wit = (block_witness, float(np.trace(block_witness).real)) if emit_witness else None
        return RobustnessReport(
            kind="generalized", value=block_term, status=status,
            per_block=reports, bounds=bounds, witness=wit,
        )
    upper = min(spectral, l1_nb)
    wit = offdiagonal_witness(rho) if emit_witness else None
    return RobustnessReport(
        kind="generalized", value=None, status="bounds_only",
        per_block=reports, interval=(block_term, upper), bounds=bounds, witness=wit,
    )


def robustness_superselection(
    mixture: SectoredState,
    kind: str = "standard",
    tol: float = BLOCK_DIAG_TOL,
) -> RobustnessReport:
    """Weighted average of per-sector reports; infinities propagate."""
    compute = robustness_standard if kind == "standard" else robustness_generalized
    sector_reports = [(w, compute(rho, tol=tol)) for w, rho in zip(mixture.weights, mixture.components)]

    lo = hi = 0.0
    any_interval = False
    statuses = []
    for w, rep in sector_reports:
        statuses.append(rep.status)
        if rep.value is not None and math.isinf(rep.value):
            return RobustnessReport(
                kind=kind, value=math.inf, status="exact",
                per_sector=tuple(sector_reports),
            )
        if rep.value is not None:
            lo += w * rep.value
            hi += w * rep.value
        else:
            any_interval = True
            lo += w * rep.interval[0]
            hi += w * rep.interval[1]
    if any_interval:
        return RobustnessReport(
            kind=kind, value=None, status="bounds_only",
            interval=(lo, hi), per_sector=tuple(sector_reports),
        )
    status = "exact" if all(s == "exact" for s in statuses) else "lower_bound"
    return RobustnessReport(kind=kind, value=lo, status=status, per_sector=tuple(sector_reports))
