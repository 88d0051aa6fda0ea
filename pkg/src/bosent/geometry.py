"""Probes of the separable set's geometry: border tests, Werner scans, bipartition sweeps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import block_decompose
from .entanglement import is_separable, negativity
from .linalg import ValidationError
from .modes import ModeUnitary, balanced_beamsplitter, random_mode_unitary, transform_state
from .states import DensityMatrix, maximally_entangled, werner_like


@dataclass(frozen=True)
class BorderPoint:
    eps: float
    nonblock_linf: float
    verdict: str


def border_probe(
    rho_sep: DensityMatrix,
    rho_ent: DensityMatrix,
    eps_grid,
) -> list[BorderPoint]:
    """Mix a non-block-diagonal perturbation into a separable anchor.

    Every positive admixture strength leaves the block-diagonal set, so the
    verdict is entangled for all eps > 0: the anchor sits on the border.
    """
    if is_separable(rho_sep).status != "separable":
        raise ValidationError("anchor state does not pass the separability test")
    if not np.any(np.abs(block_decompose(rho_ent).nonblock_part) > 0):
        raise ValidationError("perturbation state must not be block diagonal")
    points = []
    for eps in eps_grid:
        if eps < 0:
            raise ValidationError(f"eps must be nonnegative, got {eps}")
        mixed = DensityMatrix(
            basis=rho_sep.basis,
            mat=(rho_sep.mat + eps * rho_ent.mat) / (1.0 + eps),
        )
        dec = block_decompose(mixed)
        points.append(
            BorderPoint(
                eps=float(eps),
                nonblock_linf=dec.nonblock_linf(),
                verdict=is_separable(mixed).status,
            )
        )
    return points


@dataclass(frozen=True)
class WernerPoint:
    p: float
    negativity: float
    verdict: str


def werner_scan(basis, p_grid) -> list[WernerPoint]:
    """Negativity and verdict of p|psi><psi| + (1-p) I/D along a two-mode grid.

    There is no finite threshold: any p > 0 is entangled.
    """
    if basis.M != 2:
        raise ValidationError(f"werner scan needs a two-mode basis, got M={basis.M}")
    psi = maximally_entangled(basis)
    points = []
    for p in p_grid:
        rho = werner_like(basis, float(p), psi)
        points.append(
            WernerPoint(p=float(p), negativity=negativity(rho), verdict=is_separable(rho).status)
        )
    return points


@dataclass(frozen=True)
class SweepResult:
    samples: int
    separable: int
    entangled: int
    undetermined: int

    @property
    def fraction_separable(self) -> float:
        return self.separable / self.samples if self.samples else 0.0


def bipartition_sweep(
    rho: DensityMatrix,
    samples: int,
    seed: int,
    include_beamsplitter: bool = True,
) -> SweepResult:
    """Separability of a two-mode state across sampled mode re-mixings.

    The identity-proportional state survives every sample; anything else is
    expected to fail at least one (the balanced beamsplitter is always included
    as a deterministic witness).
    """
    if rho.basis.M != 2:
        raise ValidationError(f"sweep needs a two-mode state, got M={rho.basis.M}")
    rng = np.random.default_rng(seed)
    unitaries: list[ModeUnitary] = []
    if include_beamsplitter:
        unitaries.append(balanced_beamsplitter())
    while len(unitaries) < samples:
        unitaries.append(random_mode_unitary(2, rng))
    counts = {"separable": 0, "entangled": 0, "undetermined": 0}
    for mode_u in unitaries:
        verdict = is_separable(transform_state(rho, mode_u))
        counts[verdict.status] += 1
    return SweepResult(
        samples=len(unitaries),
        separable=counts["separable"],
        entangled=counts["entangled"],
        undetermined=counts["undetermined"],
    )
