from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from dtposets import gallery
from dtposets.families import (InvalidTriangulation, NotAdmissible, OutOfSimplex, Triangulation,
                               admissible_arcs, ascendant_tree, frozen_faces, j_set, lift3d_poset,
                               qn_extended, qn_index, qn_maximal_green, qn_mirror, qn_quiver,
                               qn_vertices, quiver_from_triangulation, surface_arc_poset)
from dtposets.poset import count_ideals, ideal_function
from dtposets.quiver import topological_order
from dtposets.seedtrack import dt_transform, is_maximal_green, search_reddening
from strategies import acyclic_quivers


@st.composite
def polygon_triangulations(draw, min_n=4, max_n=8):
    n = draw(st.integers(min_n, max_n))
    diagonals = []

    def split(i, j):
        if j - i < 2:
            return
        k = draw(st.integers(i + 1, j - 1))
        for a, b in ((i, k), (k, j)):
            if b - a > 1:
                diagonals.append((a, b))
        split(i, k)
        split(k, j)

    split(0, n - 1)
    return gallery.polygon(n, diagonals)


def _dt_by_vertex(q):
    seq = search_reddening(q, 14)
    assert seq is not None
    return dt_transform(q, seq).F_dt


@settings(max_examples=30, deadline=None)
@given(acyclic_quivers(max_n=4))
def test_ascendant_tree_matches_dt(q):
    F = dt_transform(q, topological_order(q)).F_dt
    for i in range(q.n):
        assert ideal_function(ascendant_tree(q, i)) == F[i]


def test_ascendant_tree_unfolds_double_arrows():
    p = ascendant_tree(gallery.double_arrow_quiver(), 2)
    assert len(p) == 5 and count_ideals(p) == 13


@settings(max_examples=25, deadline=None)
@given(polygon_triangulations())
def test_polygon_arcs_match_dt(tri):
    q = quiver_from_triangulation(tri)
    F = _dt_by_vertex(q)
    cases = admissible_arcs(tri)
    # in a disk every diagonal joins two distinct boundary points
    assert set(cases) == set(tri.interior_arcs()) and set(cases.values()) <= {1}
    for i, a in enumerate(tri.interior_arcs()):
        assert ideal_function(surface_arc_poset(tri, a)) == F[i]


@pytest.mark.parametrize("n,spokes", [(3, None), (4, None), (5, [0, 1, 3]),
                                      (6, [0, 2, 4]), (5, None)])
def test_punctured_polygon_arcs_match_dt(n, spokes):
    tri = gallery.punctured_polygon(n, spokes)
    q = quiver_from_triangulation(tri)
    F = _dt_by_vertex(q)
    arcs = tri.interior_arcs()
    cases = admissible_arcs(tri)
    assert cases
    for a, case in cases.items():
        assert ideal_function(surface_arc_poset(tri, a)) == F[arcs.index(a)], (a, case)


def test_degree_two_puncture_and_parallel_arcs_are_not_admissible():
    tri = gallery.punctured_polygon(4, [0, 2])
    assert admissible_arcs(tri) == {}


def test_tetrahedron_arcs_join_two_punctures():
    tri = gallery.tetrahedron()
    q = quiver_from_triangulation(tri)
    seq = gallery.TETRAHEDRON_SEQUENCE
    assert is_maximal_green(q, seq)
    F = dt_transform(q, seq).F_dt
    cases = admissible_arcs(tri)
    assert set(cases.values()) == {3}
    for i, a in enumerate(tri.interior_arcs()):
        assert ideal_function(surface_arc_poset(tri, a)) == F[i]


def test_annulus_has_no_admissible_arcs():
    tri = gallery.annulus()
    assert admissible_arcs(tri) == {}
    with pytest.raises(NotAdmissible):
        surface_arc_poset(tri, "x")
    q = quiver_from_triangulation(tri)
    assert abs(q.eps[0][1]) == 2


def test_bad_triangulations():
    with pytest.raises(InvalidTriangulation):
        Triangulation((("a", True), ("b", True)), (("a", "b", "a"),))
    with pytest.raises(InvalidTriangulation):
        Triangulation((("a", False), ("b", True), ("c", True)), (("a", "b", "c"),))


def test_triangulation_structured_round_trip():
    tri = gallery.fan(6)
    assert Triangulation.from_structured(tri.to_structured()) == tri


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_qn_vertex_count_and_order(n):
    verts = qn_vertices(n)
    assert len(verts) == (n - 1) * (n - 2) // 2
    assert verts[0] == (0, 0, n - 3)
    assert all(sum(v) == n - 3 for v in verts)


def test_qn_interior_vertices_have_six_neighbours():
    q = qn_quiver(6)
    index = qn_index(6)
    assert sum(1 for x in q.eps[index[(1, 1, 1)]] if x) == 6


def test_qn_extended_adds_frozen_faces():
    q = qn_extended(5)
    assert q.n_mutable == 6 and q.n_frozen == 8
    assert [name for name, _ in frozen_faces(5)][:2] == ["R1", "R2"]


def test_j_sets():
    assert j_set(4, (1, 0, 0)) == (1, 2, 4)
    assert j_set(4, (0, 0, 1)) == (1, 3, 4)


@pytest.mark.parametrize("n", [4, 5])
def test_lift_posets_match_dt(n):
    q = qn_quiver(n)
    seq = qn_maximal_green(n)
    assert is_maximal_green(q, seq)
    res = dt_transform(q, seq)
    assert res.sigma == qn_mirror(n)
    for i, v in enumerate(qn_vertices(n)):
        assert ideal_function(lift3d_poset(n, *v)) == res.F_dt[i]


def test_lift_rejects_points_off_the_simplex():
    with pytest.raises(OutOfSimplex):
        lift3d_poset(4, 1, 1, 0)
