"""Passive mode transformations and their induced action on the N-particle sector.

A unitary U on mode space lifts to a D x D unitary on the fixed-N Fock basis by
rewriting each creation operator as the U-mixed combination and expanding the
resulting polynomial against the vacuum.  The lift is chosen homomorphic:
the image of a product is the product of the images.  Only number-conserving
(passive) transformations are supported; anything else leaves the fixed-N space.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, sqrt

import numpy as np

from .fock import BasisTable
from .linalg import ValidationError
from .states import DensityMatrix, PureState

UNITARITY_TOL = 1e-10


@dataclass(frozen=True)
class ModeUnitary:
    M: int
    U: np.ndarray

    def __post_init__(self) -> None:
        U = np.asarray(self.U, dtype=complex)
        if U.shape != (self.M, self.M):
            raise ValidationError(f"expected a {self.M}x{self.M} matrix, got {U.shape}")
        defect = np.max(np.abs(U.conj().T @ U - np.eye(self.M)))
        if defect > UNITARITY_TOL:
            raise ValidationError(f"matrix is not unitary: max |U^dag U - I| = {defect:.3e}")
        object.__setattr__(self, "U", U)

    def dagger(self) -> "ModeUnitary":
        return ModeUnitary(M=self.M, U=self.U.conj().T)


def balanced_beamsplitter() -> ModeUnitary:
    """The self-inverse 50/50 two-mode mixer [[1, 1], [1, -1]] / sqrt(2)."""
    return ModeUnitary(M=2, U=np.array([[1.0, 1.0], [1.0, -1.0]]) / sqrt(2.0))


def random_mode_unitary(M: int, rng: np.random.Generator) -> ModeUnitary:
    """Haar-like sample: QR of a complex Gaussian with the phase gauge fixed."""
    G = rng.normal(size=(M, M)) + 1j * rng.normal(size=(M, M))
    Q, R = np.linalg.qr(G)
    d = np.diag(R)
    return ModeUnitary(M=M, U=Q * (d / np.abs(d)))


def _apply_creation_combination(
    amplitudes: dict[tuple[int, ...], complex], column: np.ndarray
) -> dict[tuple[int, ...], complex]:
    """Apply sum_j column[j] a_j^dagger to an occupation-amplitude table."""
    out: dict[tuple[int, ...], complex] = {}
    for occ, amp in amplitudes.items():
        for j, coeff in enumerate(column):
            if coeff == 0:
                continue
            lifted = list(occ)
            lifted[j] += 1
            key = tuple(lifted)
            out[key] = out.get(key, 0.0) + amp * coeff * sqrt(lifted[j])
    return out


def induced_unitary(mode_u: ModeUnitary, basis: BasisTable) -> np.ndarray:
    """D x D matrix of the lift on the N-particle sector.

    Column n holds the image of the Fock state with occupation n: each of its
    creation operators is replaced by the mixed combination sum_j U[j, i] a_j^dag
    and the product is expanded against the vacuum with exact occupation
    square-root factors.
    """
    if mode_u.M != basis.M:
        raise ValidationError(f"unitary acts on {mode_u.M} modes, basis has {basis.M}")
    U = mode_u.U
    D = basis.dim
    gamma = np.zeros((D, D), dtype=complex)
    vacuum = tuple(0 for _ in range(basis.M))
    for col in range(D):
        occ = basis.occupation_of(col)
        table = {vacuum: 1.0 + 0.0j}
        for i, n_i in enumerate(occ):
            for _ in range(n_i):
                table = _apply_creation_combination(table, U[:, i])
            if n_i:
                norm = sqrt(factorial(n_i))
                table = {key: amp / norm for key, amp in table.items()}
        for key, amp in table.items():
            gamma[basis.index_of_occupation(key), col] = amp
    return gamma


def transform_state(rho: DensityMatrix, mode_u: ModeUnitary) -> DensityMatrix:
    """Conjugate a state by the induced unitary; trace and spectrum are preserved."""
    gamma = induced_unitary(mode_u, rho.basis)
    return DensityMatrix(basis=rho.basis, mat=gamma @ rho.mat @ gamma.conj().T)


def transform_pure(psi: PureState, mode_u: ModeUnitary) -> PureState:
    gamma = induced_unitary(mode_u, psi.basis)
    return PureState(basis=psi.basis, amplitudes=gamma @ psi.amplitudes)
