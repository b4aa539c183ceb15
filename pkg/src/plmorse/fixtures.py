"""Small complexes used in examples, tests and the CLI.

Vertex ids are chosen so that, where the worked examples label vertices
with values, the id order matches the value order.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .simplicial import SimplicialComplex, VertexScalarField, build_complex


def triangle() -> SimplicialComplex:
    return build_complex([[0, 1, 2]])


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the ``n``-simplex, a combinatorial ``(n-1)``-sphere."""
    return build_complex(combinations(range(n + 1), n))


def tetrahedron_boundary() -> SimplicialComplex:
    return simplex_boundary(3)


def octahedron() -> SimplicialComplex:
    ring = [1, 2, 3, 4]
    tris = []
    for i in range(4):
        a, b = ring[i], ring[(i + 1) % 4]
        tris += [[0, a, b], [5, a, b]]
    return build_complex(tris)


def icosahedron() -> SimplicialComplex:
    top, bottom = 0, 11
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    tris = []
    for i in range(5):
        j = (i + 1) % 5
        tris += [[top, up[i], up[j]], [bottom, lo[i], lo[j]], [up[i], up[j], lo[i]], [up[j], lo[i], lo[j]]]
    return build_complex(tris)


# The 6-vertex real projective plane with the labelling of the worked
# example: vertex id ``k`` carries the value ``k + 1``.
RP2_TRIANGLES = [
    (2, 5, 6), (3, 4, 6), (2, 4, 5), (2, 3, 4), (1, 2, 3),
    (1, 3, 5), (3, 5, 6), (1, 2, 6), (1, 4, 6), (1, 4, 5),
]


def rp2() -> tuple[SimplicialComplex, VertexScalarField]:
    K = build_complex([[a - 1 for a in t] for t in RP2_TRIANGLES])
    return K, VertexScalarField({v: v + 1.0 for v in K.vertices})


def torus(n: int = 7, m: int | None = None) -> SimplicialComplex:
    """Periodic ``n x m`` grid with each square cut along one diagonal."""
    m = n if m is None else m

    def vid(i, j):
        return (i % n) * m + (j % m)

    tris = []
    for i in range(n):
        for j in range(m):
            a, b, c, d = vid(i, j), vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)
            tris += [[a, b, d], [a, c, d]]
    return build_complex(tris)


def torus3(n: int = 3) -> SimplicialComplex:
    """Periodic Freudenthal triangulation of the cube grid, 6 tetrahedra per cube."""

    def vid(p):
        return ((p[0] % n) * n + p[1] % n) * n + p[2] % n

    tets = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for perm in permutations(range(3)):
                    p = [x, y, z]
                    verts = [vid(p)]
                    for axis in perm:
                        p[axis] += 1
                        verts.append(vid(p))
                    tets.append(verts)
    return build_complex(tets)


# Hexagonal fan around the saddle of the worked example. Vertex ids are the
# printed values; the rim, in cyclic order, reads 2, 1, 7, 3, 8, 6.
FAN_CENTER = 5
FAN_RIM = [2, 1, 7, 3, 8, 6]
FAN_APEX = 9


def fan() -> tuple[SimplicialComplex, VertexScalarField]:
    """The disk made of the six triangles around vertex 5."""
    tris = [[FAN_CENTER, FAN_RIM[i], FAN_RIM[(i + 1) % 6]] for i in range(6)]
    K = build_complex(tris)
    return K, VertexScalarField({v: float(v) for v in K.vertices})


def fan_sphere() -> tuple[SimplicialComplex, VertexScalarField]:
    """The fan closed into a sphere by coning its rim to a top vertex 9."""
    tris = [[FAN_CENTER, FAN_RIM[i], FAN_RIM[(i + 1) % 6]] for i in range(6)]
    tris += [[FAN_APEX, FAN_RIM[i], FAN_RIM[(i + 1) % 6]] for i in range(6)]
    K = build_complex(tris)
    return K, VertexScalarField({v: float(v) for v in K.vertices})


# Pairs around vertex 5 in the relatively perfect worked example. The arrow
# drawn at vertex 1 along edge [1, 7] is read as the pair (7, [1, 7]): edge
# [1, 7] lies in the lower star of 7, never of 1.
RP_FAN_PAIRS = [
    ((7,), (1, 7)),
    ((2,), (1, 2)),
    ((2, 5), (1, 2, 5)),
    ((5,), (1, 5)),
    ((5, 7), (1, 5, 7)),
    ((3, 7), (3, 5, 7)),
    ((3, 8), (3, 5, 8)),
    ((5, 8), (5, 6, 8)),
    ((8,), (6, 8)),
    ((6,), (2, 6)),
    ((5, 6), (2, 5, 6)),
]

NON_RP_FAN_PAIRS = [
    ((2, 5), (1, 2, 5)),
    ((2,), (1, 2)),
    ((3,), (3, 5)),
    ((1,), (1, 5)),
]


def monkey_saddle() -> tuple[SimplicialComplex, VertexScalarField]:
    """Hexagonal bipyramid whose equator alternates low and high values.

    The centre vertex 0 sits between three low rim vertices and three high
    ones, so its lower link is three isolated points: a saddle of
    multiplicity two. The two poles make the complex a closed sphere.
    """
    center, rim, pole = 0, [1, 2, 3, 4, 5, 6], 7
    tris = [[center, rim[i], rim[(i + 1) % 6]] for i in range(6)]
    tris += [[pole, rim[i], rim[(i + 1) % 6]] for i in range(6)]
    K = build_complex(tris)
    values = {center: 0.0, pole: 10.0}
    for i, v in enumerate(rim):
        values[v] = -1.0 - i if i % 2 == 0 else 1.0 + i
    return K, VertexScalarField(values)


def annulus() -> SimplicialComplex:
    """Strip of six triangles closed into a ring."""
    inner, outer = [0, 1, 2], [3, 4, 5]
    tris = []
    for i in range(3):
        j = (i + 1) % 3
        tris += [[inner[i], inner[j], outer[i]], [inner[j], outer[i], outer[j]]]
    return build_complex(tris)


def ramp(n: int = 5) -> tuple[SimplicialComplex, VertexScalarField]:
    """Triangulated ``n x n`` grid with the height ``x + n*y`` (a plane)."""

    def vid(i, j):
        return i * n + j

    tris = []
    for i in range(n - 1):
        for j in range(n - 1):
            a, b, c, d = vid(i, j), vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)
            tris += [[a, b, d], [a, c, d]]
    K = build_complex(tris)
    f = VertexScalarField({vid(i, j): float(i + n * j) for i in range(n) for j in range(n)})
    return K, f


# Lower star of the top vertex 9, which the worked example leaves out: the rim
# cycle gets a spanning path and the cone over its one critical edge, the
# triangle [3, 8, 9], stays critical.
APEX_PAIRS = [
    ((9,), (1, 9)),
    ((2, 9), (1, 2, 9)),
    ((3, 9), (3, 7, 9)),
    ((6, 9), (2, 6, 9)),
    ((7, 9), (1, 7, 9)),
    ((8, 9), (6, 8, 9)),
]


def rp_fan_field():
    """Relatively perfect field on :func:`fan_sphere`."""
    from .gvf import GradientField

    return GradientField(RP_FAN_PAIRS + APEX_PAIRS)


def non_rp_fan_field():
    """Same as :func:`rp_fan_field` except around vertex 5, where it is not RP."""
    from .gvf import GradientField

    pairs = [p for p in RP_FAN_PAIRS if p != ((5,), (1, 5))]
    return GradientField(pairs + [((1,), (1, 5)), ((3,), (3, 5))] + APEX_PAIRS)
