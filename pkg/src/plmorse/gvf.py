"""Discrete gradient vector fields: validity, acyclicity and Morse counts."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable

from .errors import SubcomplexError
from .homology import Field, betti, relative_betti, relative_betti_of_cells
from .simplicial import (
    Simplex,
    SimplicialComplex,
    VertexScalarField,
    closure,
    facets,
    lower_link,
    lower_star,
)

Pair = tuple[Simplex, Simplex]


class GradientField:
    """A set of ``(tail, head)`` pairs with ``tail`` a facet of ``head``.

    Nothing is validated on construction; see :func:`validate_matching`.
    If a simplex appears in several pairs, lookups report the first one.
    """

    __slots__ = ("pairs", "_partner", "_is_tail")

    def __init__(self, pairs: Iterable[tuple[Iterable[int], Iterable[int]]] = ()):
        ps = [(tuple(a), tuple(b)) for a, b in pairs]
        self.pairs: tuple[Pair, ...] = tuple(sorted(ps, key=lambda p: (len(p[0]), p)))
        self._partner: dict[Simplex, Simplex] = {}
        self._is_tail: dict[Simplex, bool] = {}
        for a, b in self.pairs:
            self._partner.setdefault(a, b)
            self._is_tail.setdefault(a, True)
            self._partner.setdefault(b, a)
            self._is_tail.setdefault(b, False)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradientField) and self.pairs == other.pairs

    def __repr__(self) -> str:
        return f"GradientField({len(self.pairs)} pairs)"

    def partner(self, sigma: Simplex) -> Simplex | None:
        return self._partner.get(sigma)

    def is_tail(self, sigma: Simplex) -> bool:
        return self._is_tail.get(sigma, False)

    def is_paired(self, sigma: Simplex) -> bool:
        return sigma in self._partner

    def critical(self, K: SimplicialComplex) -> list[Simplex]:
        return [s for s in K.simplices() if s not in self._partner]

    def union(self, other: "GradientField") -> "GradientField":
        return GradientField(self.pairs + other.pairs)


@dataclass(frozen=True)
class Violation:
    kind: str
    simplices: tuple[Simplex, ...]
    message: str


def validate_matching(K: SimplicialComplex, V: GradientField) -> list[Violation]:
    """Everything that keeps ``V`` from being a discrete vector field on ``K``."""
    out: list[Violation] = []
    seen: dict[Simplex, Pair] = {}
    for a, b in V.pairs:
        for s in (a, b):
            if s not in K:
                out.append(Violation("not-in-complex", (s,), f"{list(s)} is not a simplex of the complex"))
        if len(b) != len(a) + 1 or not set(a) <= set(b):
            out.append(Violation("not-a-facet", (a, b), f"{list(a)} is not a facet of {list(b)}"))
        for s in (a, b):
            if s in seen:
                out.append(Violation("multiple-pairs", (s,), f"{list(s)} appears in {[list(x) for x in seen[s]]} and {[list(a), list(b)]}"))
            else:
                seen[s] = (a, b)
    return out


@dataclass(frozen=True)
class AcyclicityResult:
    acyclic: bool
    witness: tuple[Pair, ...] | None = None

    def __bool__(self) -> bool:
        return self.acyclic


def is_acyclic(K: SimplicialComplex, V: GradientField) -> AcyclicityResult:
    """Search for a closed V-path.

    Nodes are the tails of ``V``; ``s -> s'`` whenever ``s'`` is another
    tail lying on the boundary of the head paired with ``s``. A directed
    cycle in this graph is exactly a closed V-path, returned as witness.
    """
    succ: dict[Simplex, list[Simplex]] = {}
    for a, b in V.pairs:
        succ[a] = [s for s in facets(b) if s != a and V.is_tail(s)]
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(succ, WHITE)
    for root in sorted(succ):
        if color[root] != WHITE:
            continue
        color[root] = GREY
        path = [root]
        stack = [iter(succ[root])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                color[path.pop()] = BLACK
                stack.pop()
                continue
            if color[nxt] == GREY:
                cycle = path[path.index(nxt):]
                return AcyclicityResult(False, tuple((s, V.partner(s)) for s in cycle))
            if color[nxt] == WHITE:
                color[nxt] = GREY
                path.append(nxt)
                stack.append(iter(succ[nxt]))
    return AcyclicityResult(True)


@dataclass
class MorseProfile:
    """Critical counts, globally and per filtration step.

    ``per_level`` is keyed by the tiebreak key ``(value, vertex)`` of the
    vertex owning the step; ``value`` alone is the raw level.
    """

    m: tuple[int, ...]
    per_level: dict[tuple[float, int], tuple[int, ...]]

    def at_value(self, level: float) -> tuple[int, ...]:
        out = [0] * len(self.m)
        for (value, _), counts in self.per_level.items():
            if value == level:
                out = [x + y for x, y in zip(out, counts)]
        return tuple(out)


def morse_profile(K: SimplicialComplex, f: VertexScalarField, V: GradientField) -> MorseProfile:
    d = K.dim
    m = [0] * (d + 1)
    per: dict[tuple[float, int], list[int]] = {f.key(v): [0] * (d + 1) for v in K.vertices}
    for s in V.critical(K):
        k = len(s) - 1
        m[k] += 1
        per[f.key(f.argmax(s))][k] += 1
    return MorseProfile(tuple(m), {k: tuple(per[k]) for k in sorted(per)})


@dataclass
class WeakMorseReport:
    m: tuple[int, ...]
    betti: tuple[int, ...]

    @property
    def slack(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.m, self.betti))

    @property
    def holds(self) -> bool:
        return all(s >= 0 for s in self.slack)

    @property
    def perfect(self) -> bool:
        return all(s == 0 for s in self.slack)


def check_weak_morse(K: SimplicialComplex, V: GradientField, field: Field | str = Field.GF2) -> WeakMorseReport:
    d = K.dim
    m = [0] * (d + 1)
    for s in V.critical(K):
        m[len(s) - 1] += 1
    return WeakMorseReport(tuple(m), betti(K, field).ranks)


@dataclass(frozen=True)
class Mismatch:
    level: float
    vertex: int
    index: int
    m: int
    beta: int

    def describe(self) -> str:
        return f"level {self.level:g} (vertex {self.vertex}), index {self.index}: m = {self.m} but beta = {self.beta}"


@dataclass(frozen=True)
class LevelRecord:
    level: float
    vertex: int
    m: tuple[int, ...]
    beta: tuple[int, ...]


@dataclass
class RPCertificate:
    levels: list[LevelRecord]
    mismatches: list[Mismatch]
    route_disagreements: list[int] = dc_field(default_factory=list)

    @property
    def is_rp(self) -> bool:
        return not self.mismatches and not self.route_disagreements


def check_relative_perfectness(
    K: SimplicialComplex,
    f: VertexScalarField,
    V: GradientField,
    field: Field | str = Field.GF2,
) -> RPCertificate:
    """Compare critical counts with relative Betti numbers at every step.

    For each vertex ``v`` (in filtration order) the step is the pair
    ``(K^l, K^l')`` of sublevel complexes just after and just before ``v``
    enters. Its Betti numbers are computed twice: from the difference of
    consecutive sublevel sets, and from the lower star and lower link of
    ``v``. The two must agree; a disagreement is recorded separately.
    """
    f.check_domain(K)
    d = K.dim
    profile = morse_profile(K, f, V)
    order = sorted(K.as_set(), key=lambda s: (f.key(f.argmax(s)), len(s), s))
    levels, mismatches, disagreements = [], [], []
    sublevel: set = set()
    i = 0
    for v in f.order():
        kv = f.key(v)
        step = []
        while i < len(order) and f.key(f.argmax(order[i])) == kv:
            step.append(order[i])
            i += 1
        sublevel.update(step)
        for s in step:
            if any(t not in sublevel for t in facets(s)):
                raise SubcomplexError(f"sublevel set at {kv} is not a complex")
        direct = relative_betti_of_cells(step, d, field)
        local = relative_betti(closure(lower_star(K, f, v)), lower_link(K, f, v), field)
        if any(direct[k] != local[k] for k in range(d + 1)):
            disagreements.append(v)
        counts = profile.per_level[kv]
        levels.append(LevelRecord(kv[0], v, counts, direct.ranks))
        for k in range(d + 1):
            if counts[k] != direct[k]:
                mismatches.append(Mismatch(kv[0], v, k, counts[k], direct[k]))
    return RPCertificate(levels, mismatches, disagreements)
