from __future__ import annotations

from dtposets import gallery
from dtposets.families import quiver_from_triangulation
from dtposets.poset import count_ideals, ideal_function
from dtposets.quiver import Quiver, find_isomorphism
from dtposets.seedtrack import dt_transform, is_maximal_green, is_reddening


def test_twice_punctured_sequence_and_polynomial():
    q = gallery.twice_punctured_disk()
    seq = gallery.indices(q, gallery.TWICE_PUNCTURED_SEQUENCE)
    assert is_reddening(q, seq)
    assert dt_transform(q, seq).F_dt[q.index("2")] == gallery.twice_punctured_f2()


def test_double_arrow_poset():
    p = gallery.double_arrow_f3_poset()
    assert count_ideals(p) == 13
    assert len(ideal_function(p)) == 8
    q = gallery.double_arrow_quiver()
    assert dt_transform(q, (1, 0, 2)).F_dt[2] == ideal_function(p)


def test_stored_sequences_are_green():
    assert is_maximal_green(gallery.glued_quiver(), gallery.GLUED_SEQUENCE)
    tet = quiver_from_triangulation(gallery.tetrahedron())
    assert is_maximal_green(tet, gallery.TETRAHEDRON_SEQUENCE)
    local = gallery.local_two_puncture_quiver()
    assert is_reddening(local, gallery.indices(local, gallery.LOCAL_TWO_PUNCTURE_SEQUENCE))


def test_glued_vertex_poset():
    F = dt_transform(gallery.glued_quiver(), gallery.GLUED_SEQUENCE).F_dt
    assert ideal_function(gallery.glued_vertex0_poset()) == F[0]
    assert len(F[0]) == 87


def test_markov_cover_folds_onto_markov():
    cover = gallery.markov_cover()
    fold = gallery.markov_fold(cover)
    markov = gallery.markov_quiver()
    for s, t, m in cover.arrows():
        assert markov.eps[fold[s]][fold[t]] == 2 and m == 1


def test_polygon_fan_is_linear_type_a():
    q = quiver_from_triangulation(gallery.fan(6))
    a3 = Quiver.from_arrows(["1", "2", "3"], [("1", "2"), ("2", "3")])
    assert find_isomorphism(q, a3) is not None
