"""Construction of a relatively perfect gradient field on manifolds, d <= 3.

Each lower link gets a perfect gradient field (spanning forests in
dimension <= 1, free-face collapses in dimension 2), which is lifted to the
lower star by coning with the vertex. The union over all vertices is the
result, since lower stars partition the complex.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .errors import NotAManifoldError, NotASphereSubcomplexError, UnsupportedDimensionError
from .gvf import GradientField, Pair
from .simplicial import (
    Simplex,
    SimplicialComplex,
    VertexScalarField,
    cone,
    facets,
    is_combinatorial_manifold,
    lower_link,
)


def find_free_face(K2: SimplicialComplex) -> Pair | None:
    """Smallest ``(edge, triangle)`` with the edge in exactly one triangle."""
    best = None
    for e in K2.simplices(1):
        cof = K2.cofacets(e)
        if len(cof) == 1:
            best = (e, cof[0])
            break
    return best


@dataclass
class CollapseTrace:
    pairs: list[Pair]
    residual: SimplicialComplex


def collapse_triangles(K2: SimplicialComplex) -> CollapseTrace:
    """Remove free (edge, triangle) pairs until no triangle has a free edge.

    At every step the lexicographically smallest free edge is used, which
    makes the result the same as calling :func:`find_free_face` repeatedly.
    """
    alive = set(K2.as_set())
    tri_of: dict[Simplex, set[Simplex]] = {e: set() for e in K2.simplices(1)}
    for t in K2.simplices(2):
        for e in facets(t):
            tri_of[e].add(t)
    heap = [e for e, ts in tri_of.items() if len(ts) == 1]
    heapq.heapify(heap)
    pairs: list[Pair] = []
    while heap:
        e = heapq.heappop(heap)
        if e not in alive or len(tri_of[e]) != 1:
            continue
        (t,) = tri_of[e]
        pairs.append((e, t))
        alive.discard(e)
        alive.discard(t)
        for other in facets(t):
            tri_of[other].discard(t)
            if other in alive and len(tri_of[other]) == 1:
                heapq.heappush(heap, other)
    return CollapseTrace(pairs, SimplicialComplex(alive))


def spanning_forest_gradient(K1: SimplicialComplex) -> GradientField:
    """Perfect gradient on a graph from breadth-first spanning trees.

    Every component is rooted at its smallest vertex id. Non-root vertices
    are paired with the tree edge towards the root; roots and non-tree edges
    stay critical.
    """
    if K1.dim > 1:
        raise UnsupportedDimensionError(f"expected a complex of dimension <= 1, got {K1.dim}")
    adj: dict[int, list[int]] = {v: [] for v in K1.vertices}
    for a, b in K1.simplices(1):
        adj[a].append(b)
        adj[b].append(a)
    seen: set[int] = set()
    pairs = []
    for root in sorted(adj):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    pairs.append(((w,), tuple(sorted((u, w)))))
                    queue.append(w)
    return GradientField(pairs)


def _components(K: SimplicialComplex) -> list[SimplicialComplex]:
    parent = {v: v for v in K.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in K.simplices(1):
        parent[find(a)] = find(b)
    groups: dict[int, list[Simplex]] = {}
    for s in K.maximal_simplices():
        groups.setdefault(find(s[0]), []).append(s)
    return [SimplicialComplex(groups[r]) for r in sorted(groups)]


def _is_closed_surface(K: SimplicialComplex) -> bool:
    return K.dim == 2 and K.is_pure() and all(len(K.cofacets(e)) == 2 for e in K.simplices(1))


def perfect_gradient_s2_subcomplex(K: SimplicialComplex) -> GradientField:
    """Perfect gradient field on a complex whose underlying space sits in S^2.

    Components are handled separately. A component that is a whole 2-sphere
    keeps its smallest triangle critical and collapses the rest; any other
    2-dimensional component collapses through free faces down to a graph.
    Graphs are finished with spanning forests.
    """
    if K.dim > 2:
        raise NotASphereSubcomplexError(f"a subcomplex of S^2 has dimension <= 2, got {K.dim}")
    if K.dim <= 1:
        return spanning_forest_gradient(K)
    pairs: list[Pair] = []
    for comp in _components(K):
        if comp.dim <= 1:
            pairs.extend(spanning_forest_gradient(comp).pairs)
            continue
        work = comp
        if _is_closed_surface(comp):
            if comp.euler_characteristic() != 2:
                raise NotASphereSubcomplexError(
                    f"closed surface with Euler characteristic {comp.euler_characteristic()} is not a sphere"
                )
            hole = comp.simplices(2)[0]
            work = SimplicialComplex(s for s in comp.as_set() if s != hole)
        trace = collapse_triangles(work)
        if trace.residual.dim == 2:
            raise NotASphereSubcomplexError("a 2-dimensional part has no free face, so it is not a proper subcomplex of S^2")
        pairs.extend(trace.pairs)
        pairs.extend(spanning_forest_gradient(trace.residual).pairs)
    return GradientField(pairs)


def cone_gradient(
    v: int,
    W: GradientField,
    link: SimplicialComplex,
    f: VertexScalarField,
) -> GradientField:
    """Lift a gradient field on the lower link of ``v`` to its lower star.

    Pairs ``(a, b)`` become ``(va, vb)``; the critical vertex with the
    smallest value is paired with ``v`` through their edge; every other
    critical simplex ``g`` of ``W`` leaves ``vg`` critical.
    """
    if len(link) == 0:
        raise ValueError("empty lower link: the lower star is the single critical vertex")
    pairs = [(cone(v, a), cone(v, b)) for a, b in W.pairs]
    crit0 = [s for s in W.critical(link) if len(s) == 1]
    gamma = min(crit0, key=lambda s: f.key(s[0]))
    pairs.append(((v,), cone(v, gamma)))
    return GradientField(pairs)


@dataclass
class LowerStarStep:
    vertex: int
    link: SimplicialComplex
    link_field: GradientField | None
    star_field: GradientField


def lower_star_fields(K: SimplicialComplex, f: VertexScalarField) -> Iterator[LowerStarStep]:
    """Per-vertex pieces of the construction, in increasing order of ``f``."""
    for v in f.order():
        link = lower_link(K, f, v)
        if len(link) == 0:
            yield LowerStarStep(v, link, None, GradientField())
            continue
        W = perfect_gradient_s2_subcomplex(link)
        yield LowerStarStep(v, link, W, cone_gradient(v, W, link, f))


def build_rp_gradient(K: SimplicialComplex, f: VertexScalarField, check_manifold: bool = True) -> GradientField:
    d = K.dim
    if d == -1:
        return GradientField()
    if not 1 <= d <= 3:
        raise UnsupportedDimensionError(f"the construction supports 1 <= d <= 3, got d={d}")
    if check_manifold:
        res = is_combinatorial_manifold(K, d)
        if not res:
            raise NotAManifoldError(f"vertex {res.vertex}: {res.reason}")
    f.check_domain(K)
    pairs: list[Pair] = []
    for step in lower_star_fields(K, f):
        pairs.extend(step.star_field.pairs)
    return GradientField(pairs)
