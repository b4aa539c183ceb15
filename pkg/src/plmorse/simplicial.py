"""Simplicial complexes, vertex scalar fields and the sublevel filtration.

Simplices are plain tuples of strictly increasing non-negative integers.
A :class:`SimplicialComplex` is immutable once built and keeps per-dimension
sets plus a cofacet index so that star and link queries stay local.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import (
    DegenerateConeError,
    DimensionError,
    InvalidLevelError,
    MalformedSimplexError,
    MissingSimplexError,
    UnsupportedDimensionError,
)

Simplex = tuple[int, ...]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Validate ``vertices`` and return them as a sorted tuple."""
    vs = tuple(vertices)
    if not vs:
        raise MalformedSimplexError("a simplex needs at least one vertex")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise MalformedSimplexError(f"vertex ids must be non-negative integers, got {v!r}")
    if len(set(vs)) != len(vs):
        raise MalformedSimplexError(f"duplicate vertex in simplex {list(vs)}")
    return tuple(sorted(vs))


def dim(sigma: Simplex) -> int:
    return len(sigma) - 1


def facets(sigma: Simplex) -> list[Simplex]:
    """Codimension-one faces, in the order obtained by dropping vertex j."""
    if len(sigma) == 1:
        return []
    return [sigma[:j] + sigma[j + 1:] for j in range(len(sigma))]


def faces(sigma: Simplex) -> Iterator[Simplex]:
    """All non-empty faces of ``sigma`` including itself."""
    for k in range(1, len(sigma) + 1):
        yield from combinations(sigma, k)


def cone(v: int, sigma: Simplex) -> Simplex:
    """The simplex spanned by ``v`` and the vertices of ``sigma``."""
    if v in sigma:
        raise DegenerateConeError(f"vertex {v} already belongs to {list(sigma)}")
    return tuple(sorted(sigma + (v,)))


def _canonical(simplices: Iterable[Simplex]) -> list[Simplex]:
    return sorted(simplices, key=lambda s: (len(s), s))


class SimplicialComplex:
    """A face-closed, immutable collection of simplices.

    The constructor takes the face closure of whatever it is given, so any
    collection of simplices (a star, a lower star, a list of facets) can be
    passed directly.
    """

    __slots__ = ("_all", "_by_dim", "_cofacets", "_ordered")

    def __init__(self, simplices: Iterable[Simplex] = ()):
        closed: set[Simplex] = set()
        for s in simplices:
            if s in closed:
                continue
            for face in faces(s):
                closed.add(face)
        self._all = frozenset(closed)
        by_dim: dict[int, set[Simplex]] = {}
        for s in closed:
            by_dim.setdefault(len(s) - 1, set()).add(s)
        self._by_dim = {k: frozenset(v) for k, v in by_dim.items()}
        cof: dict[Simplex, list[Simplex]] = {s: [] for s in closed}
        for s in closed:
            for f in facets(s):
                cof[f].append(s)
        self._cofacets = {k: tuple(sorted(v)) for k, v in cof.items()}
        self._ordered: tuple[Simplex, ...] | None = None

    @classmethod
    def from_maximal(cls, maximal_simplices: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(make_simplex(s) for s in maximal_simplices)

    # -- basic queries -------------------------------------------------
    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    @property
    def vertices(self) -> list[int]:
        return sorted(s[0] for s in self._by_dim.get(0, ()))

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self._all

    def __len__(self) -> int:
        return len(self._all)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._all == other._all

    def __hash__(self) -> int:
        return hash(self._all)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector()})"

    def simplices(self, k: int | None = None) -> list[Simplex]:
        """Simplices in canonical order (dimension, then lexicographic)."""
        if k is None:
            if self._ordered is None:
                self._ordered = tuple(_canonical(self._all))
            return list(self._ordered)
        return sorted(self._by_dim.get(k, ()))

    def as_set(self) -> frozenset[Simplex]:
        return self._all

    def count(self, k: int) -> int:
        return len(self._by_dim.get(k, ()))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.count(k) for k in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def maximal_simplices(self) -> list[Simplex]:
        return _canonical(s for s in self._all if not self._cofacets[s])

    def is_pure(self) -> bool:
        d = self.dim
        return all(len(s) - 1 == d for s in self.maximal_simplices())

    def cofacets(self, sigma: Simplex) -> tuple[Simplex, ...]:
        self._require(sigma)
        return self._cofacets[sigma]

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self._all <= other._all

    def _require(self, sigma: Simplex) -> None:
        if sigma not in self._all:
            raise MissingSimplexError(f"simplex {list(sigma)} is not in the complex")

    # -- neighbourhoods ------------------------------------------------
    def star(self, sigma: Simplex) -> frozenset[Simplex]:
        """All cofaces of ``sigma``, ``sigma`` included."""
        sigma = tuple(sigma)
        self._require(sigma)
        seen = {sigma}
        frontier = [sigma]
        while frontier:
            nxt = []
            for s in frontier:
                for c in self._cofacets[s]:
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(seen)

    def link(self, sigma: Simplex) -> "SimplicialComplex":
        sigma = tuple(sigma)
        vs = set(sigma)
        out = []
        for tau in self.star(sigma):
            rest = tuple(x for x in tau if x not in vs)
            if rest:
                out.append(rest)
        return SimplicialComplex(out)

    def vertex_star(self, v: int) -> frozenset[Simplex]:
        return self.star((v,))

    def vertex_link(self, v: int) -> "SimplicialComplex":
        return self.link((v,))


def build_complex(maximal_simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Face closure of a list of vertex tuples."""
    return SimplicialComplex.from_maximal(maximal_simplices)


def closure(simplices: Iterable[Simplex]) -> SimplicialComplex:
    return SimplicialComplex(simplices)


class VertexScalarField:
    """Real values on the vertices, totally ordered by ``(value, vertex id)``.

    Collisions in the raw values are broken by vertex id, so every query
    below behaves as if the function were injective.
    """

    __slots__ = ("values",)

    def __init__(self, values: Mapping[int, float] | Iterable[float]):
        if not isinstance(values, Mapping):
            values = dict(enumerate(values))
        self.values: dict[int, float] = {int(k): float(v) for k, v in values.items()}

    def __getitem__(self, v: int) -> float:
        return self.values[v]

    def __repr__(self) -> str:
        return f"VertexScalarField({self.values!r})"

    def key(self, v: int) -> tuple[float, int]:
        return (self.values[v], v)

    def argmax(self, sigma: Simplex) -> int:
        return max(sigma, key=self.key)

    def fmax(self, sigma: Simplex) -> tuple[float, tuple[float, int]]:
        """Raw maximum over the vertices of ``sigma`` and its tiebreak key."""
        k = self.key(self.argmax(sigma))
        return k[0], k

    def is_injective(self) -> bool:
        return len(set(self.values.values())) == len(self.values)

    def image(self) -> list[float]:
        return sorted(set(self.values.values()))

    def order(self) -> list[int]:
        """Vertices sorted by the total order."""
        return sorted(self.values, key=self.key)

    def check_domain(self, K: SimplicialComplex) -> None:
        if set(self.values) != set(K.vertices):
            raise InvalidLevelError("scalar field must be defined on exactly the vertices of the complex")


def fmax(K: SimplicialComplex, f: VertexScalarField, sigma: Simplex):
    K._require(tuple(sigma))
    return f.fmax(tuple(sigma))


def lower_star(K: SimplicialComplex, f: VertexScalarField, v: int) -> frozenset[Simplex]:
    """Simplices of the star of ``v`` whose maximum vertex is ``v``."""
    return frozenset(s for s in K.star((v,)) if f.argmax(s) == v)


def lower_link(K: SimplicialComplex, f: VertexScalarField, v: int) -> SimplicialComplex:
    kv = f.key(v)
    return SimplicialComplex(s for s in K.link((v,)) if f.key(f.argmax(s)) < kv)


def sublevel_complex(K: SimplicialComplex, f: VertexScalarField, level) -> SimplicialComplex:
    """All simplices with ``f_max <= level``.

    ``level`` is either a raw value or a tiebreak key ``(value, vertex)``; the
    latter selects a single step of the vertex-by-vertex filtration.
    """
    if isinstance(level, tuple):
        keep = [s for s in K.as_set() if f.key(f.argmax(s)) <= level]
    else:
        keep = [s for s in K.as_set() if f.fmax(s)[0] <= level]
    return SimplicialComplex(keep)


def predecessor_level(f: VertexScalarField | Iterable[float], level: float) -> float:
    """Greatest image value strictly below ``level``, or ``level - 1`` if none."""
    image = f.image() if isinstance(f, VertexScalarField) else sorted(set(f))
    if level not in image:
        raise InvalidLevelError(f"{level!r} is not a value of the function")
    lower = [x for x in image if x < level]
    return lower[-1] if lower else level - 1


# -- manifold recognition ------------------------------------------------

@dataclass(frozen=True)
class ManifoldCheck:
    ok: bool
    vertex: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _connected(K: SimplicialComplex) -> bool:
    vs = K.vertices
    if not vs:
        return True
    parent = {v: v for v in vs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in K.simplices(1):
        parent[find(a)] = find(b)
    return len({find(v) for v in vs}) == 1


def sphere_failure(L: SimplicialComplex, k: int) -> str:
    """Why ``L`` is not recognised as a ``k``-sphere, or ``""`` if it is.

    Recognition is combinatorial and exact for ``k <= 2``.
    """
    if k == 0:
        if L.dim != 0 or L.count(0) != 2:
            return f"link has f-vector {L.f_vector()}, expected two points"
        return ""
    if L.dim != k or not L.is_pure():
        return f"link is not a pure {k}-complex"
    if not _connected(L):
        return "link is disconnected"
    if k == 1:
        for v in L.vertices:
            if len(L.cofacets((v,))) != 2:
                return f"link vertex {v} has degree {len(L.cofacets((v,)))}"
        return ""
    if k == 2:
        for e in L.simplices(1):
            if len(L.cofacets(e)) != 2:
                return f"link edge {list(e)} lies in {len(L.cofacets(e))} triangles"
        for v in L.vertices:
            if sphere_failure(L.vertex_link(v), 1):
                return f"link of link vertex {v} is not a cycle"
        if L.euler_characteristic() != 2:
            return f"link is a closed surface with Euler characteristic {L.euler_characteristic()}"
        return ""
    raise UnsupportedDimensionError(f"sphere recognition is only implemented up to dimension 2, not {k}")


def check_vertex_link(K: SimplicialComplex, v: int, d: int | None = None) -> ManifoldCheck:
    """Check that the link of ``v`` is a ``(d-1)``-sphere."""
    d = K.dim if d is None else d
    if not 1 <= d <= 3:
        raise UnsupportedDimensionError(f"manifold checks support 1 <= d <= 3, got d={d}")
    reason = sphere_failure(K.vertex_link(v), d - 1)
    return ManifoldCheck(not reason, None if not reason else v, reason)


def is_combinatorial_manifold(K: SimplicialComplex, d: int | None = None) -> ManifoldCheck:
    """Whether every vertex link of ``K`` is a ``(d-1)``-sphere.

    Raises :class:`DimensionError` when ``K`` is not pure of dimension ``d``.
    The diagnostic names the first failing vertex in id order.
    """
    d = K.dim if d is None else d
    if not 1 <= d <= 3:
        raise UnsupportedDimensionError(f"manifold checks support 1 <= d <= 3, got d={d}")
    if len(K) and (K.dim != d or not K.is_pure()):
        raise DimensionError(f"complex is not pure of dimension {d}")
    for v in K.vertices:
        res = check_vertex_link(K, v, d)
        if not res:
            return res
    return ManifoldCheck(True)
