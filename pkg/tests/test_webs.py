from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dtposets.families import OutOfSimplex, frozen_faces, qn_vertices
from dtposets.webs import (ABOVE, BELOW, IdentityViolation, NotUnital, boundary_measurement,
                           build_web, evaluate_at_ones, face_j_set, factor_phi, lgv_count,
                           macmahon, path_families, phi_matches_lift, plane_partitions,
                           term_counts, verify_web_identity)
from dtposets.poly import parse


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_web_shape(n):
    W = build_web(n)
    assert W.is_acyclic()
    assert len(W.sources) == len(W.sinks) == n
    assert len(W.faces) == (n - 1) * (n - 2) // 2


@pytest.mark.parametrize("n", [4, 5])
def test_family_enumeration_matches_lgv(n):
    W = build_web(n)
    for k in range(1, n + 1):
        I = tuple(range(1, k + 1))
        for J in itertools.combinations(range(1, n + 1), k):
            assert len(path_families(W, I, J)) == lgv_count(W, I, J)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_term_counts_are_box_counts(n):
    counts = term_counts(n)
    for (a, b, c), t in counts.items():
        assert t == macmahon(c + 1, a + 1, b + 1)
        W = build_web(n)
        J = face_j_set(n, (a, b, c))
        assert t == lgv_count(W, range(1, len(J) + 1), J)


@settings(max_examples=30)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_plane_partition_enumeration_matches_product_formula(a, b, c):
    assert len(plane_partitions(a, b, c)) == macmahon(a, b, c)


def test_macmahon_small_values():
    assert macmahon(1, 1, 1) == 2
    assert macmahon(2, 2, 2) == 20
    assert macmahon(3, 3, 3) == 980


@pytest.mark.parametrize("n", [4, 5])
def test_monomial_identity_and_dt_cross_check(n):
    report = verify_web_identity(n, BELOW)
    assert report.ok, "\n".join(report.lines())


def test_flipped_domination_side_fails():
    report = verify_web_identity(4, ABOVE)
    assert not report.ok
    with pytest.raises(IdentityViolation):
        verify_web_identity(4, ABOVE, strict=True)


@pytest.mark.parametrize("n", [4, 5])
def test_phi_is_the_box_ideal_function(n):
    assert all(phi_matches_lift(n).values())


@pytest.mark.slow
def test_q6_identity():
    assert verify_web_identity(6).ok
    assert all(phi_matches_lift(6).values())


def test_frozen_measurements_are_monomials():
    W = build_web(5)
    for name, _ in frozen_faces(5):
        M = boundary_measurement(W, name)
        assert len(M.terms()) == 1


def test_factor_phi():
    N, phi = factor_phi(parse("X1^2*X2 + X1^3*X2"))
    assert N == parse("X1^2*X2") and phi == parse("1 + X1")
    with pytest.raises(NotUnital):
        factor_phi(parse("X1 + X2"))


def test_measurement_at_ones_counts_families():
    W = build_web(5)
    for v in qn_vertices(5):
        M = boundary_measurement(W, v)
        J = face_j_set(5, v)
        assert evaluate_at_ones(M) == len(path_families(W, range(1, len(J) + 1), J))


def test_unknown_faces():
    with pytest.raises(OutOfSimplex):
        face_j_set(4, (1, 1, 0))
    with pytest.raises(KeyError):
        face_j_set(4, "R9")
