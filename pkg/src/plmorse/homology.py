"""Betti numbers of simplicial complexes and pairs over GF(2) or Q.

Ranks come from column elimination on sparse boundary matrices. For a pair
``(K, L)`` only the simplices of ``K \\ L`` enter the chain complex and
boundary terms landing in ``L`` are dropped, which is exactly the quotient
chain complex ``C(K) / C(L)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import SubcomplexError
from .simplicial import Simplex, SimplicialComplex, facets


class Field(str, enum.Enum):
    GF2 = "gf2"
    RATIONAL = "rational"

    @classmethod
    def coerce(cls, value: "Field | str") -> "Field":
        return value if isinstance(value, cls) else cls(str(value).lower())


@dataclass(frozen=True)
class BettiVector:
    """Ranks indexed by homological degree.

    For a reduced vector ``ranks[0]`` is degree -1. Indexing with ``[i]``
    uses degrees and returns 0 outside the stored range.
    """

    ranks: tuple[int, ...]
    reduced: bool = False

    @property
    def first_degree(self) -> int:
        return -1 if self.reduced else 0

    def __getitem__(self, degree: int) -> int:
        i = degree - self.first_degree
        if 0 <= i < len(self.ranks):
            return self.ranks[i]
        return 0

    def __iter__(self):
        return iter(self.ranks)

    def __len__(self) -> int:
        return len(self.ranks)

    def nonzero(self) -> dict[int, int]:
        return {i + self.first_degree: r for i, r in enumerate(self.ranks) if r}

    def is_zero(self) -> bool:
        return not any(self.ranks)


def _rank_gf2(columns: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank


def _rank_rational(columns: list[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for raw in columns:
        col = {r: Fraction(x) for r, x in raw.items() if x}
        while col:
            low = max(col)
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            factor = col[low] / other[low]
            for r, x in other.items():
                y = col.get(r, 0) - factor * x
                if y:
                    col[r] = y
                else:
                    col.pop(r, None)
    return rank


def boundary_ranks(cells: Iterable[Simplex], field: Field | str = Field.GF2) -> tuple[dict[int, int], dict[int, int]]:
    """Counts and boundary ranks of the chain complex spanned by ``cells``.

    Returns ``(n, r)`` with ``n[k]`` the number of k-cells and ``r[k]`` the
    rank of the boundary map from k-cells to (k-1)-cells, where any facet
    outside ``cells`` is treated as zero.
    """
    field = Field.coerce(field)
    by_dim: dict[int, list[Simplex]] = {}
    for s in cells:
        by_dim.setdefault(len(s) - 1, []).append(s)
    for k in by_dim:
        by_dim[k].sort()
    n = {k: len(v) for k, v in by_dim.items()}
    r: dict[int, int] = {}
    for k, cols in by_dim.items():
        if k == 0 or k - 1 not in by_dim:
            r[k] = 0
            continue
        row = {s: i for i, s in enumerate(by_dim[k - 1])}
        if field is Field.GF2:
            masks = []
            for s in cols:
                m = 0
                for f in facets(s):
                    i = row.get(f)
                    if i is not None:
                        m |= 1 << i
                masks.append(m)
            r[k] = _rank_gf2(masks)
        else:
            entries = []
            for s in cols:
                col = {}
                for j, f in enumerate(facets(s)):
                    i = row.get(f)
                    if i is not None:
                        col[i] = -1 if j % 2 else 1
                entries.append(col)
            r[k] = _rank_rational(entries)
    return n, r


def _betti_from(cells: Iterable[Simplex], top: int, field) -> tuple[int, ...]:
    n, r = boundary_ranks(cells, field)
    return tuple(n.get(k, 0) - r.get(k, 0) - r.get(k + 1, 0) for k in range(top + 1))


def relative_betti_of_cells(cells: Iterable[Simplex], top: int, field: Field | str = Field.GF2) -> BettiVector:
    """Betti numbers of a pair given only the simplices of ``K \\ L``."""
    return BettiVector(_betti_from(cells, top, field))


def betti(K: SimplicialComplex, field: Field | str = Field.GF2) -> BettiVector:
    return BettiVector(_betti_from(K.as_set(), K.dim, field))


def reduced_betti(K: SimplicialComplex, field: Field | str = Field.GF2) -> BettiVector:
    """Reduced Betti numbers, starting at degree -1.

    Only the empty complex has nonzero reduced homology in degree -1.
    """
    if len(K) == 0:
        return BettiVector((1,), reduced=True)
    b = list(betti(K, field).ranks)
    b[0] -= 1
    return BettiVector((0, *b), reduced=True)


def relative_betti(K: SimplicialComplex, L: SimplicialComplex | Iterable[Simplex], field: Field | str = Field.GF2) -> BettiVector:
    if not isinstance(L, SimplicialComplex):
        given = frozenset(tuple(s) for s in L)
        L = SimplicialComplex(given)
        if L.as_set() != given:
            raise SubcomplexError("L is not closed under taking faces")
    if not L.is_subcomplex_of(K):
        raise SubcomplexError("L is not a subcomplex of K")
    return relative_betti_of_cells(K.as_set() - L.as_set(), K.dim, field)
