"""Piecewise-linear critical points of a vertex function.

Four classifiers are provided, named after what they inspect:

* ``I``: Banchoff's index, from triangles of the star where ``v`` is the
  middle value (surfaces only);
* ``W``: number of wedges of the lower star (surfaces only);
* ``H``: relative homology of the closed lower star modulo the lower link;
* ``L``: reduced homology of the lower link.

``I`` and ``W`` deliberately share no code with ``H`` and ``L`` so that
comparing them is a real cross-check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

from .errors import NotAManifoldError, UnsupportedDimensionError
from .homology import Field, reduced_betti, relative_betti
from .simplicial import (
    SimplicialComplex,
    VertexScalarField,
    check_vertex_link,
    closure,
    is_combinatorial_manifold,
    lower_link,
    lower_star,
)


class Kind(str, enum.Enum):
    REGULAR = "regular"
    MINIMUM = "minimum"
    MAXIMUM = "maximum"
    SADDLE = "saddle"


class Source(str, enum.Enum):
    I = "I"  # noqa: E741
    W = "W"
    H = "H"
    L = "L"


@dataclass(frozen=True)
class PLClassification:
    vertex: int
    kind: Kind
    multiplicities: dict[int, int] = dc_field(default_factory=dict)
    source: Source = Source.H
    simple: bool = True

    @property
    def total(self) -> int:
        return sum(self.multiplicities.values())

    @property
    def critical(self) -> bool:
        return self.kind is not Kind.REGULAR

    @property
    def index(self) -> int | None:
        """The index when exactly one index is critical, else ``None``."""
        if len(self.multiplicities) == 1:
            return next(iter(self.multiplicities))
        return None

    def verdict(self) -> tuple[Kind, tuple[tuple[int, int], ...]]:
        """What two classifications must share to agree."""
        return self.kind, tuple(sorted(self.multiplicities.items()))


def _kind(mult: dict[int, int], d: int) -> Kind:
    if not mult:
        return Kind.REGULAR
    if mult == {0: 1}:
        return Kind.MINIMUM
    if mult == {d: 1}:
        return Kind.MAXIMUM
    return Kind.SADDLE


def _require_link(K: SimplicialComplex, v: int, d: int) -> None:
    res = check_vertex_link(K, v, d)
    if not res:
        raise NotAManifoldError(f"vertex {v}: {res.reason}")


def _require_surface(K: SimplicialComplex, v: int) -> None:
    if K.dim != 2:
        raise UnsupportedDimensionError(f"this classifier is defined on surfaces only, got d={K.dim}")
    _require_link(K, v, 2)


# -- Banchoff -----------------------------------------------------------

def middle_triangle_count(K: SimplicialComplex, f: VertexScalarField, v: int) -> int:
    """Triangles of the star of ``v`` in which ``v`` has the middle value."""
    _require_surface(K, v)
    kv = f.key(v)
    count = 0
    for t in K.vertex_star(v):
        if len(t) != 3:
            continue
        a, b = (f.key(u) for u in t if u != v)
        if min(a, b) < kv < max(a, b):
            count += 1
    return count


def banchoff_index(K: SimplicialComplex, f: VertexScalarField, v: int) -> int:
    count = middle_triangle_count(K, f, v)
    if count % 2:
        raise NotAManifoldError(f"vertex {v}: odd number of middle triangles")
    return 1 - count // 2


def _neighbours(K: SimplicialComplex, v: int) -> list[int]:
    return [u for e in K.cofacets((v,)) for u in e if u != v]


def _min_or_max(K, f, v, d) -> dict[int, int]:
    kv = f.key(v)
    below = [u for u in _neighbours(K, v) if f.key(u) < kv]
    return {0: 1} if not below else {d: 1}


def i_classify(K: SimplicialComplex, f: VertexScalarField, v: int) -> PLClassification:
    iota = banchoff_index(K, f, v)
    if iota == 1:
        mult = _min_or_max(K, f, v, 2)
    elif iota == 0:
        mult = {}
    else:
        mult = {1: -iota}
    return PLClassification(v, _kind(mult, 2), mult, Source.I)


# -- wedges -------------------------------------------------------------

def _cyclic_link_order(K: SimplicialComplex, v: int) -> list[int]:
    """Vertices of the (circular) link of ``v`` in cyclic order."""
    adj: dict[int, list[int]] = {}
    for t in K.vertex_star(v):
        if len(t) == 3:
            a, b = (u for u in t if u != v)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    start = min(adj)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def wedge_count(K: SimplicialComplex, f: VertexScalarField, v: int) -> int:
    """Number of wedges of the lower star of ``v``.

    Walks the link cycle and counts maximal runs of lower vertices; an empty
    lower link and a lower link covering the whole cycle both give 0.
    """
    _require_surface(K, v)
    kv = f.key(v)
    ring = _cyclic_link_order(K, v)
    low = [f.key(u) < kv for u in ring]
    if all(low) or not any(low):
        return 0
    # a run starts wherever a lower vertex follows a higher one
    return sum(1 for i in range(len(low)) if low[i] and not low[i - 1])


def w_classify(K: SimplicialComplex, f: VertexScalarField, v: int) -> PLClassification:
    w = wedge_count(K, f, v)
    if w == 0:
        mult = _min_or_max(K, f, v, 2)
    elif w == 1:
        mult = {}
    else:
        mult = {1: w - 1}
    return PLClassification(v, _kind(mult, 2), mult, Source.W)


# -- homological ----------------------------------------------------------

def _require_hl(K: SimplicialComplex, v: int) -> int:
    d = K.dim
    if not 1 <= d <= 3:
        raise UnsupportedDimensionError(f"classification supports 1 <= d <= 3, got d={d}")
    _require_link(K, v, d)
    return d


def h_classify(K: SimplicialComplex, f: VertexScalarField, v: int, field: Field | str = Field.GF2) -> PLClassification:
    d = _require_hl(K, v)
    rel = relative_betti(closure(lower_star(K, f, v)), lower_link(K, f, v), field)
    mult = rel.nonzero()
    return PLClassification(v, _kind(mult, d), mult, Source.H)


def l_classify(K: SimplicialComplex, f: VertexScalarField, v: int, field: Field | str = Field.GF2) -> PLClassification:
    """Classification from the reduced homology of the lower link.

    A nonzero reduced rank in degree ``j`` contributes to index ``j + 1``.
    When several degrees are nonzero all of them are reported and the
    result is flagged as not simple.
    """
    d = _require_hl(K, v)
    red = reduced_betti(lower_link(K, f, v), field)
    mult = {j + 1: b for j, b in red.nonzero().items()}
    return PLClassification(v, _kind(mult, d), mult, Source.L, simple=len(mult) <= 1)


CLASSIFIERS = {
    Source.I: lambda K, f, v, field: i_classify(K, f, v),
    Source.W: lambda K, f, v, field: w_classify(K, f, v),
    Source.H: h_classify,
    Source.L: l_classify,
}


@dataclass
class ClassificationReport:
    dim: int
    per_vertex: dict[int, dict[Source, PLClassification]]
    disagreements: list[int]
    # vertices whose link is not a sphere, left unclassified
    skipped: list[int] = dc_field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def primary(self, v: int) -> PLClassification:
        return self.per_vertex[v][Source.H]

    def critical(self, source: Source = Source.H) -> list[PLClassification]:
        return [c[source] for c in self.per_vertex.values() if c[source].critical]

    def is_pl_morse(self) -> bool:
        return all(c.total == 1 for c in self.critical())


def classify_all(
    K: SimplicialComplex,
    f: VertexScalarField,
    field: Field | str = Field.GF2,
    check_manifold: bool = True,
) -> ClassificationReport:
    """Classify every vertex with all definitions applicable to ``K``.

    ``H`` and ``L`` always run; ``I`` and ``W`` are added on surfaces. Any
    vertex on which the verdicts differ is listed in ``disagreements``. The
    empty complex gives an empty report.
    Without ``check_manifold``, vertices with a non-spherical link (such as
    boundary vertices) are skipped instead of raising.
    """
    d = K.dim
    if d == -1:
        return ClassificationReport(d, {}, [])
    if not 1 <= d <= 3:
        raise UnsupportedDimensionError(f"classification supports 1 <= d <= 3, got d={d}")
    if check_manifold:
        res = is_combinatorial_manifold(K, d)
        if not res:
            raise NotAManifoldError(f"vertex {res.vertex}: {res.reason}")
    f.check_domain(K)
    sources = [Source.H, Source.L] + ([Source.I, Source.W] if d == 2 else [])
    per_vertex = {}
    disagreements, skipped = [], []
    for v in f.order():
        if not check_manifold and not check_vertex_link(K, v, d):
            skipped.append(v)
            continue
        results = {s: CLASSIFIERS[s](K, f, v, field) for s in sources}
        per_vertex[v] = results
        if len({c.verdict() for c in results.values()}) > 1:
            disagreements.append(v)
    return ClassificationReport(d, per_vertex, disagreements, skipped)


def is_pl_morse(K: SimplicialComplex, f: VertexScalarField, field: Field | str = Field.GF2) -> bool:
    """True when every PL critical vertex has total multiplicity 1."""
    res = is_combinatorial_manifold(K)
    if not res:
        raise NotAManifoldError(f"vertex {res.vertex}: {res.reason}")
    return all(h_classify(K, f, v, field).total <= 1 for v in K.vertices)
