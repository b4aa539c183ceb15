import random

import pytest
from hypothesis import given, settings, strategies as st

from plmorse import fixtures
from plmorse.errors import NotAManifoldError, NotASphereSubcomplexError, UnsupportedDimensionError
from plmorse.gvf import (
    GradientField,
    check_relative_perfectness,
    is_acyclic,
    morse_profile,
    validate_matching,
)
from plmorse.homology import betti, relative_betti
from plmorse.rpbuild import (
    build_rp_gradient,
    collapse_triangles,
    cone_gradient,
    find_free_face,
    lower_star_fields,
    perfect_gradient_s2_subcomplex,
    spanning_forest_gradient,
)
from plmorse.simplicial import SimplicialComplex, build_complex, closure, lower_link, lower_star

from corpus import id_field, random_field, surfaces
from oracles import betti_dense


def m_of(K, V, dim=None):
    m = [0] * ((K.dim if dim is None else dim) + 1)
    for s in V.critical(K):
        m[len(s) - 1] += 1
    return tuple(m)


# -- free faces -------------------------------------------------------------

def test_free_face_of_lone_triangle():
    assert find_free_face(fixtures.triangle()) == ((0, 1), (0, 1, 2))


def test_sphere_has_no_free_face():
    assert find_free_face(fixtures.tetrahedron_boundary()) is None


def test_free_face_of_fan_lower_star():
    K, f = fixtures.fan()
    C = closure(lower_star(K, f, 5))
    free = [e for e in C.simplices(1) if len(C.cofacets(e)) == 1]
    assert free == [(1, 2), (1, 5), (2, 5)]
    assert find_free_face(C) == ((1, 2), (1, 2, 5))


def test_collapse_preserves_homology_at_every_step():
    K = fixtures.annulus()
    trace = collapse_triangles(K)
    cells = set(K.as_set())
    want = betti_dense(cells)
    for e, t in trace.pairs:
        assert e in cells and t in cells
        assert sum(1 for s in cells if len(s) == 3 and set(e) < set(s)) == 1
        cells -= {e, t}
        assert betti_dense(cells)[:2] == want[:2]
    assert cells == trace.residual.as_set()
    assert trace.residual.dim <= 1


# -- forests and perfect fields on S^2 subcomplexes -------------------------

def test_spanning_forest_examples():
    point = build_complex([[4]])
    assert len(spanning_forest_gradient(point)) == 0 and m_of(point, GradientField()) == (1,)
    path = build_complex([[0, 1], [1, 2]])
    V = spanning_forest_gradient(path)
    assert len(V) == 2 and m_of(path, V) == (1, 0)
    ring = fixtures.FAN_RIM
    cycle = build_complex([[ring[i], ring[(i + 1) % 6]] for i in range(6)])
    assert betti_dense(cycle.as_set()) == (1, 1)
    assert m_of(cycle, spanning_forest_gradient(cycle)) == (1, 1)


def test_spanning_forest_roots_at_smallest_vertex():
    K = build_complex([[3, 4], [4, 5], [7, 8]])
    V = spanning_forest_gradient(K)
    assert [s for s in V.critical(K) if len(s) == 1] == [(3,), (7,)]


def test_spanning_forest_rejects_triangles():
    with pytest.raises(UnsupportedDimensionError):
        spanning_forest_gradient(fixtures.triangle())


def test_perfect_field_examples():
    S = fixtures.tetrahedron_boundary()
    assert m_of(S, perfect_gradient_s2_subcomplex(S)) == (1, 0, 1)
    L = build_complex([[1, 2], [3]])
    assert m_of(L, perfect_gradient_s2_subcomplex(L)) == (2, 0)
    A = fixtures.annulus()
    assert betti_dense(A.as_set()) == (1, 1, 0)
    V = perfect_gradient_s2_subcomplex(A)
    assert m_of(A, V) == (1, 1, 0)
    assert validate_matching(A, V) == [] and is_acyclic(A, V)


def test_perfect_field_on_two_spheres():
    a = fixtures.tetrahedron_boundary().simplices(2)
    b = [[x + 10 for x in t] for t in a]
    K = build_complex(a + b)
    V = perfect_gradient_s2_subcomplex(K)
    assert m_of(K, V) == (2, 0, 2) and is_acyclic(K, V)


def test_closed_torus_is_not_a_sphere_subcomplex():
    with pytest.raises(NotASphereSubcomplexError):
        perfect_gradient_s2_subcomplex(fixtures.torus(7))


# -- coning -----------------------------------------------------------------

def test_cone_over_fan_lower_link():
    K, f = fixtures.fan()
    link = lower_link(K, f, 5)
    W = GradientField([((2,), (1, 2))])
    assert W.critical(link) == [(1,), (3,)]
    Wp = cone_gradient(5, W, link, f)
    assert set(Wp.pairs) == {((2, 5), (1, 2, 5)), ((5,), (1, 5))}
    assert Wp.critical(closure(lower_star(K, f, 5))) == [(1,), (2,), (3,), (1, 2), (3, 5)]
    assert [s for s in lower_star(K, f, 5) if not Wp.is_paired(s)] == [(3, 5)]


def test_built_field_reproduces_the_cone_picture():
    K, f = fixtures.fan_sphere()
    V = build_rp_gradient(K, f)
    around = [p for p in V.pairs if 5 in p[1] and f.argmax(p[1]) == 5]
    assert set(around) == {((5,), (1, 5)), ((2, 5), (1, 2, 5))}


def test_cone_over_single_point():
    K = fixtures.triangle()
    f = id_field(K)
    link = build_complex([[0]])
    assert list(cone_gradient(1, GradientField(), link, f).pairs) == [((1,), (0, 1))]


def test_cone_over_sphere_gives_maximum_tetrahedron():
    K = fixtures.simplex_boundary(4)
    f = id_field(K)
    link = lower_link(K, f, 4)
    W = perfect_gradient_s2_subcomplex(link)
    assert m_of(link, W) == (1, 0, 1)
    Wp = cone_gradient(4, W, link, f)
    crit = [s for s in lower_star(K, f, 4) if not Wp.is_paired(s)]
    assert [len(s) - 1 for s in crit] == [3]


def test_cone_of_empty_link_raises():
    K = fixtures.triangle()
    with pytest.raises(ValueError):
        cone_gradient(0, GradientField(), SimplicialComplex(), id_field(K))


# -- whole construction -----------------------------------------------------

def test_rp2_construction():
    K, f = fixtures.rp2()
    V = build_rp_gradient(K, f)
    crit = V.critical(K)
    assert [len(s) for s in crit] == [1, 2, 3]
    assert [f.fmax(s)[0] for s in crit] == [1.0, 4.0, 6.0]
    assert crit == [(0,), (1, 3), (2, 4, 5)]


def test_tetrahedron_construction():
    K = fixtures.tetrahedron_boundary()
    f = id_field(K)
    V = build_rp_gradient(K, f)
    crit = V.critical(K)
    assert m_of(K, V) == (1, 0, 1)
    assert crit[0] == (0,) and f.fmax(crit[1])[0] == 3.0


def test_three_sphere_construction():
    K = fixtures.simplex_boundary(4)
    V = build_rp_gradient(K, id_field(K))
    assert m_of(K, V) == (1, 0, 0, 1)


def test_circle_construction():
    K = build_complex([[0, 1], [1, 2], [2, 3], [0, 3]])
    f = id_field(K)
    V = build_rp_gradient(K, f)
    assert m_of(K, V) == (1, 1)
    assert check_relative_perfectness(K, f, V).is_rp


def test_construction_preconditions():
    K, f = fixtures.fan()
    with pytest.raises(NotAManifoldError):
        build_rp_gradient(K, f)
    with pytest.raises(UnsupportedDimensionError):
        build_rp_gradient(build_complex([[0]]), id_field(build_complex([[0]])))


def test_construction_is_deterministic():
    K = fixtures.torus(7)
    f = random_field(K, random.Random(11))
    assert build_rp_gradient(K, f) == build_rp_gradient(K, f)


# -- properties -------------------------------------------------------------

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=25, deadline=None)
@given(seed=seeds)
def test_lower_links_in_three_manifolds_always_collapse(seed):
    rng = random.Random(seed)
    K = fixtures.torus3(3)
    f = random_field(K, rng)
    for v in K.vertices:
        link = lower_link(K, f, v)
        if link.dim == 2 and link != K.link((v,)):
            assert find_free_face(link) is not None
            assert collapse_triangles(link).residual.dim <= 1


@settings(max_examples=25, deadline=None)
@given(seed=seeds, name=st.sampled_from(sorted(surfaces())))
def test_per_vertex_counts(seed, name):
    rng = random.Random(seed)
    K = surfaces()[name][0]
    f = random_field(K, rng)
    for step in lower_star_fields(K, f):
        if step.link_field is None:
            continue
        w = m_of(step.link, step.link_field, K.dim - 1)
        star = closure(lower_star(K, f, step.vertex))
        crit = [s for s in lower_star(K, f, step.vertex) if not step.star_field.is_paired(s)]
        wp = [sum(1 for s in crit if len(s) == i + 1) for i in range(K.dim + 1)]
        assert wp[0] == 0 and wp[1] == w[0] - 1
        assert all(wp[i] == w[i - 1] for i in range(2, K.dim + 1))
        rel = relative_betti(star, step.link)
        assert all(wp[i] == rel[i] for i in range(K.dim + 1))


def test_built_fields_on_refined_and_3d_fixtures():
    rng = random.Random(5)
    for K in (fixtures.torus3(3), fixtures.simplex_boundary(4)):
        f = random_field(K, rng)
        V = build_rp_gradient(K, f)
        assert validate_matching(K, V) == [] and is_acyclic(K, V)
        assert check_relative_perfectness(K, f, V).is_rp
        assert morse_profile(K, f, V).m[0] >= betti(K).ranks[0]
