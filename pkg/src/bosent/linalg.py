"""Dense complex matrix kernel: Hermitian eigensolves, trace norm, entrywise norms.

All tolerances are relative to (1 + max entry modulus) with an absolute
floor of 1e-12; dimensions stay small (< 500) so conditioning is mild.
"""

from __future__ import annotations

import numpy as np

HERMITICITY_TOL = 1e-10
ABS_FLOOR = 1e-12


class ValidationError(ValueError):
    """Input violates a structural invariant (hermiticity, trace, positivity...)."""


def _scale(mat: np.ndarray) -> float:
    return 1.0 + (np.max(np.abs(mat)) if mat.size else 0.0)


def hermiticity_defect(mat: np.ndarray) -> tuple[float, tuple[int, int]]:
    """Largest |M[i,j] - conj(M[j,i])| and the offending index pair."""
    diff = np.abs(mat - mat.conj().T)
    i, j = np.unravel_index(np.argmax(diff), diff.shape)
    return float(diff[i, j]), (int(i), int(j))


def assert_hermitian(mat: np.ndarray, tol: float = HERMITICITY_TOL) -> None:
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {mat.shape}")
    defect, (i, j) = hermiticity_defect(mat)
    bound = max(tol * _scale(mat), ABS_FLOOR)
    if defect > bound:
        raise ValidationError(
            f"matrix is not Hermitian: worst entry pair ({i},{j})/({j},{i}) "
            f"with |M[{i},{j}] - conj(M[{j},{i}])| = {defect:.3e} > {bound:.3e}"
        )


def eig_hermitian(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (real, ascending) and orthonormal eigenvector columns.

    Raises ValidationError if the input fails the hermiticity check.
    """
    mat = np.asarray(mat, dtype=complex)
    assert_hermitian(mat)
    vals, vecs = np.linalg.eigh(mat)
    return vals, vecs


def trace_norm(mat: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    vals, _ = eig_hermitian(mat)
    return float(np.sum(np.abs(vals)))


def l1_norm(mat: np.ndarray) -> float:
    """Entrywise l1 norm: sum of the moduli of all entries."""
    return float(np.sum(np.abs(np.asarray(mat))))


def min_eigenvalue(mat: np.ndarray) -> float:
    vals, _ = eig_hermitian(mat)
    return float(vals[0])


def is_psd(mat: np.ndarray, tol: float = 1e-9) -> bool:
    return min_eigenvalue(mat) >= -max(tol * _scale(np.asarray(mat)), ABS_FLOOR)
