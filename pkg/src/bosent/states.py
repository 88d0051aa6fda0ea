"""Density matrices and pure states in BasisTable ordering, plus the named families."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import BasisTable
from .linalg import ValidationError, assert_hermitian, eig_hermitian

TRACE_TOL = 1e-10
PSD_TOL = 1e-9
NORM_SLACK = 1e-6  # inputs this close to normalized are renormalized, not rejected


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive, unit-trace operator in flat basis order."""

    basis: BasisTable
    mat: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "mat", np.asarray(self.mat, dtype=complex))
        problems = validate_density(self.basis, self.mat)
        if problems:
            raise ValidationError("invalid density matrix: " + "; ".join(problems))

    @property
    def dim(self) -> int:
        return self.basis.dim


@dataclass(frozen=True)
class PureState:
    basis: BasisTable
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.basis.dim,):
            raise ValidationError(
                f"amplitude vector has shape {amps.shape}, expected ({self.basis.dim},)"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > TRACE_TOL:
            raise ValidationError(f"state norm {norm} is not 1 (off by {abs(norm - 1.0):.3e})")
        object.__setattr__(self, "amplitudes", amps)


@dataclass(frozen=True)
class SectoredState:
    """Incoherent mixture of fixed-particle-number states sharing one mode split."""

    weights: tuple[float, ...]
    components: tuple[DensityMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.components) or not self.components:
            raise ValidationError("mixture needs matching, nonempty weights and components")
        if any(w < -TRACE_TOL for w in self.weights):
            raise ValidationError(f"negative mixture weight in {self.weights}")
        total = sum(self.weights)
        if abs(total - 1.0) > TRACE_TOL:
            raise ValidationError(f"mixture weights sum to {total}, not 1")
        first = self.components[0].basis
        for comp in self.components[1:]:
            if (comp.basis.M, comp.basis.m) != (first.M, first.m):
                raise ValidationError(
                    "all mixture components must share (M, m); got "
                    f"({comp.basis.M}, {comp.basis.m}) vs ({first.M}, {first.m})"
                )


def validate_density(basis: BasisTable, mat: np.ndarray, psd_tol: float = PSD_TOL) -> list[str]:
    """Every violated invariant of a density matrix, as human-readable strings."""
    problems = []
    mat = np.asarray(mat, dtype=complex)
    if mat.shape != (basis.dim, basis.dim):
        problems.append(f"shape {mat.shape} does not match basis dimension {basis.dim}")
        return problems
    try:
        assert_hermitian(mat)
    except ValidationError as err:
        problems.append(str(err))
    tr = complex(np.trace(mat))
    if abs(tr - 1.0) > TRACE_TOL:
        problems.append(f"trace {tr} differs from 1 by {abs(tr - 1.0):.3e}")
    if not problems:
        vals, _ = eig_hermitian(mat)
        if vals[0] < -psd_tol:
            problems.append(f"not positive semidefinite: smallest eigenvalue {vals[0]:.3e}")
    return problems


def make_pure(basis: BasisTable, amplitudes) -> PureState:
    """Pure state from an amplitude vector; near-unit norms are renormalized."""
    amps = np.asarray(amplitudes, dtype=complex)
    if amps.shape != (basis.dim,):
        raise ValidationError(f"expected {basis.dim} amplitudes, got shape {amps.shape}")
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise ValidationError("zero amplitude vector")
    if abs(norm - 1.0) > NORM_SLACK:
        raise ValidationError(f"norm {norm} too far from 1 to renormalize silently")
    return PureState(basis=basis, amplitudes=amps / norm)


def to_density(psi: PureState) -> DensityMatrix:
    return DensityMatrix(basis=psi.basis, mat=np.outer(psi.amplitudes, psi.amplitudes.conj()))


def totally_mixed(basis: BasisTable) -> DensityMatrix:
    return DensityMatrix(basis=basis, mat=np.eye(basis.dim, dtype=complex) / basis.dim)


def phase_state(basis: BasisTable, phases=None) -> PureState:
    """Two-mode superposition with amplitudes exp(i phi_k) / sqrt(N+1)."""
    if basis.M != 2:
        raise ValidationError(f"phase state needs a two-mode basis, got M={basis.M}")
    N = basis.N
    if phases is None:
        phases = np.zeros(N + 1)
    phases = np.asarray(phases, dtype=float)
    if phases.shape != (N + 1,):
        raise ValidationError(f"need {N + 1} phases, got shape {phases.shape}")
    amps = np.exp(1j * phases) / np.sqrt(N + 1)
    return PureState(basis=basis, amplitudes=amps)


def negative_coherence_state(basis: BasisTable) -> DensityMatrix:
    """Two-mode mixed state: diagonal 1/(N+1), all off-diagonal -1/(N(N+1)).

    Sits on the positivity boundary (smallest eigenvalue 0); its spectral
    mixing bound beats its entrywise-l1 bound, the reverse of the phase state.
    """
    if basis.M != 2:
        raise ValidationError(f"this state family needs a two-mode basis, got M={basis.M}")
    N = basis.N
    if N < 1:
        raise ValidationError("need N >= 1")
    d = N + 1
    mat = -np.ones((d, d), dtype=complex) / (N * d)
    np.fill_diagonal(mat, 1.0 / d)
    return DensityMatrix(basis=basis, mat=mat)


def maximally_entangled(basis: BasisTable) -> PureState:
    """Equal Schmidt weight 1/sqrt(D_tot) on the canonical pairing of every block.

    Within sector k the s-th first-side vector pairs with the s-th second-side
    vector for s <= min(D_k, D_{N-k}); D_tot is the total Schmidt count.
    """
    pairs = []
    for k, sec in enumerate(basis.sectors):
        for alpha in range(1, min(sec.dim_first, sec.dim_second) + 1):
            pairs.append(basis.flat_index(k, alpha, alpha))
    amps = np.zeros(basis.dim, dtype=complex)
    amps[pairs] = 1.0 / np.sqrt(len(pairs))
    return PureState(basis=basis, amplitudes=amps)


def schmidt_count(basis: BasisTable) -> int:
    """Sum over sectors of min(D_k, D_{N-k})."""
    return sum(min(s.dim_first, s.dim_second) for s in basis.sectors)


def werner_like(basis: BasisTable, p: float, psi: PureState) -> DensityMatrix:
    """p |psi><psi| + (1-p) I/D; psi is expected to be maximally entangled."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"mixing parameter p={p} outside [0, 1]")
    if psi.basis is not basis and psi.basis.to_json_dict() != basis.to_json_dict():
        raise ValidationError("pure component lives in a different basis")
    pure = np.outer(psi.amplitudes, psi.amplitudes.conj())
    mat = p * pure + (1.0 - p) * np.eye(basis.dim) / basis.dim
    return DensityMatrix(basis=basis, mat=mat)


def superselection_mixture(components) -> SectoredState:
    """Mixture of (weight, DensityMatrix) pairs over sectors of fixed particle number."""
    weights = tuple(float(w) for w, _ in components)
    states = tuple(rho for _, rho in components)
    return SectoredState(weights=weights, components=states)
