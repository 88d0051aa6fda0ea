"""Fock basis of the N-particle sector of M bosonic modes under an (m, M-m) split.

Basis states |k, s; N-k, s'> carry k particles in the first m modes and
N-k in the rest.  Within each sector the occupation vectors are listed in
lexicographically descending order (first mode most occupied first), and
the flat ordering runs k ascending, then s, then s'.  Sector k also embeds
into a genuine tensor product: row block [offset_A(k), offset_A(k)+D_k) times
column block [offset_B(k), offset_B(k)+D_{N-k}) of a C^A x C^B grid, which is
what makes partial transposition of arbitrary states well defined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .linalg import ValidationError

DEFAULT_DIM_CAP = 10000


@dataclass(frozen=True)
class Bipartition:
    """Split of M modes into the first m and the remaining M - m."""

    N: int
    M: int
    m: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValidationError(f"particle count must be >= 1, got N={self.N}")
        if self.M < 2:
            raise ValidationError(f"mode count must be >= 2, got M={self.M}")
        if not 1 <= self.m <= self.M - 1:
            raise ValidationError(
                f"need 1 <= m <= M-1 so both sides are nonempty, got m={self.m}, M={self.M}"
            )


def total_dim(N: int, M: int, cap: int = DEFAULT_DIM_CAP) -> int:
    """Dimension C(N+M-1, N) of the N-particle sector of M modes."""
    if N < 1 or M < 1:
        raise ValidationError(f"need N >= 1 and M >= 1, got N={N}, M={M}")
    D = comb(N + M - 1, N)
    if D > cap:
        raise ValidationError(f"dimension {D} exceeds cap {cap}")
    return D


def occupations(total: int, modes: int) -> list[tuple[int, ...]]:
    """All occupation vectors of `modes` modes summing to `total`.

    Listed lexicographically descending, i.e. the first mode is filled first.
    """
    if modes == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in occupations(total - first, modes - 1):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class Sector:
    k: int
    occ_first: list[tuple[int, ...]]
    occ_second: list[tuple[int, ...]]

    @property
    def dim_first(self) -> int:
        return len(self.occ_first)

    @property
    def dim_second(self) -> int:
        return len(self.occ_second)

    @property
    def dim(self) -> int:
        return self.dim_first * self.dim_second


@dataclass(frozen=True)
class BasisTable:
    """Enumerated Fock basis for one bipartition, immutable after construction."""

    bipartition: Bipartition
    sectors: list[Sector]
    offsets: list[int]        # flat start index of sector k
    offsets_a: list[int]      # row-block start of sector k in the embedding
    offsets_b: list[int]      # column-block start of sector k
    dim: int
    a_dim: int
    b_dim: int
    _flat_of_label: dict = field(repr=False, default_factory=dict)

    @property
    def N(self) -> int:
        return self.bipartition.N

    @property
    def M(self) -> int:
        return self.bipartition.M

    @property
    def m(self) -> int:
        return self.bipartition.m

    def sector_dims(self) -> list[tuple[int, int]]:
        return [(s.dim_first, s.dim_second) for s in self.sectors]

    def flat_index(self, k: int, sigma: int, sigma_p: int) -> int:
        """Flat position of |k, sigma; N-k, sigma'> (sigma, sigma' are 1-based)."""
        key = (k, sigma, sigma_p)
        if key not in self._flat_of_label:
            raise ValidationError(f"no basis state with (k, sigma, sigma') = {key}")
        return self._flat_of_label[key]

    def label_of(self, flat: int) -> tuple[int, int, int]:
        if not 0 <= flat < self.dim:
            raise ValidationError(f"flat index {flat} out of range 0..{self.dim - 1}")
        for k, sec in enumerate(self.sectors):
            start = self.offsets[k]
            if flat < start + sec.dim:
                rel = flat - start
                return k, rel // sec.dim_second + 1, rel % sec.dim_second + 1
        raise AssertionError("unreachable")

    def embed_index(self, k: int, sigma: int, sigma_p: int) -> tuple[int, int]:
        """(row, col) cell of |k, sigma; N-k, sigma'> in the A x B embedding."""
        self.flat_index(k, sigma, sigma_p)  # validates the label
        return self.offsets_a[k] + sigma - 1, self.offsets_b[k] + sigma_p - 1

    def occupation_of(self, flat: int) -> tuple[int, ...]:
        """Full M-mode occupation vector of a flat basis index."""
        k, sigma, sigma_p = self.label_of(flat)
        sec = self.sectors[k]
        return sec.occ_first[sigma - 1] + sec.occ_second[sigma_p - 1]

    def index_of_occupation(self, occ: tuple[int, ...]) -> int:
        occ = tuple(int(n) for n in occ)
        if len(occ) != self.M or any(n < 0 for n in occ) or sum(occ) != self.N:
            raise ValidationError(f"occupation {occ} is not a {self.N}-particle state of {self.M} modes")
        k = sum(occ[: self.m])
        sec = self.sectors[k]
        sigma = sec.occ_first.index(occ[: self.m]) + 1
        sigma_p = sec.occ_second.index(occ[self.m :]) + 1
        return self.flat_index(k, sigma, sigma_p)

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "M": self.M,
            "m": self.m,
            "D": self.dim,
            "sectors": [
                {
                    "k": s.k,
                    "occ_first": [list(o) for o in s.occ_first],
                    "occ_second": [list(o) for o in s.occ_second],
                }
                for s in self.sectors
            ],
        }


def enumerate_basis(bp: Bipartition, cap: int = DEFAULT_DIM_CAP) -> BasisTable:
    """Build the BasisTable for a bipartition; rejects dimensions above `cap`."""
    D = total_dim(bp.N, bp.M, cap=cap)
    sectors = []
    for k in range(bp.N + 1):
        occ_first = occupations(k, bp.m)
        occ_second = occupations(bp.N - k, bp.M - bp.m)
        assert len(occ_first) == comb(k + bp.m - 1, k)
        assert len(occ_second) == comb(bp.N - k + bp.M - bp.m - 1, bp.N - k)
        sectors.append(Sector(k=k, occ_first=occ_first, occ_second=occ_second))

    offsets, offsets_a, offsets_b = [], [], []
    pos = pos_a = pos_b = 0
    for sec in sectors:
        offsets.append(pos)
        offsets_a.append(pos_a)
        offsets_b.append(pos_b)
        pos += sec.dim
        pos_a += sec.dim_first
        pos_b += sec.dim_second
    assert pos == D

    flat_of_label = {}
    for k, sec in enumerate(sectors):
        for sigma in range(1, sec.dim_first + 1):
            for sigma_p in range(1, sec.dim_second + 1):
                flat_of_label[(k, sigma, sigma_p)] = (
                    offsets[k] + (sigma - 1) * sec.dim_second + (sigma_p - 1)
                )

    return BasisTable(
        bipartition=bp,
        sectors=sectors,
        offsets=offsets,
        offsets_a=offsets_a,
        offsets_b=offsets_b,
        dim=D,
        a_dim=pos_a,
        b_dim=pos_b,
        _flat_of_label=flat_of_label,
    )


def two_mode_basis(N: int) -> BasisTable:
    """Convenience: the (m=1, M=2) basis |k; N-k>, k = 0..N."""
    return enumerate_basis(Bipartition(N=N, M=2, m=1))
