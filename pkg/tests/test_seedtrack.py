from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from dtposets.poly import ONE, parse, var
from dtposets.quiver import Quiver, full_subquiver, topological_order
from dtposets.seedtrack import (Color, Mode, NotReddening, change_initial_seed, dt_transform,
                                g_matrix, initial_seed, is_maximal_green, is_reddening,
                                laurent_cluster, mutate_seed, mutate_sequence,
                                restrict_to_subquiver, search_reddening, separation_check)
from strategies import acyclic_quivers, quivers


def linear(n: int) -> Quiver:
    return Quiver.from_arrows([str(i) for i in range(1, n + 1)],
                              [(str(i), str(i + 1)) for i in range(1, n)])


def test_initial_seed_is_green():
    s = initial_seed(linear(3))
    assert all(s.color(i) is Color.GREEN for i in range(3))
    assert g_matrix(s) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_a2_pentagon():
    q = linear(2)
    s = mutate_sequence(initial_seed(q), [0, 1, 0, 1, 0])
    # five mutations of A2 return the seed with the two vertices swapped
    assert sorted(s.C) == [(0, 1), (1, 0)]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_linear_quiver_dt_is_a_sum_of_suffix_products(n):
    q = linear(n)
    res = dt_transform(q, topological_order(q))
    # the sink collects 1 + X_n + X_n X_{n-1} + ... + X_n ... X_1
    expected, term = ONE, ONE
    for v in range(n - 1, -1, -1):
        term = term * var(v)
        expected = expected + term
    assert res.F_dt[n - 1] == expected


def test_kronecker_has_no_reddening_sequence():
    q = Quiver.from_arrows(["1", "2"], [("1", "2", 2)])
    assert search_reddening(q, 10, Mode.GREEN) == (0, 1)
    k3 = Quiver.from_arrows(["1", "2", "3"], [("1", "2", 2), ("2", "3", 2), ("3", "1", 2)])
    assert search_reddening(k3, 8) is None


def test_dt_rejects_non_reddening_sequence():
    with pytest.raises(NotReddening):
        dt_transform(linear(3), (0,))


def test_reddening_versus_green():
    q = linear(3)
    assert is_maximal_green(q, (0, 1, 2))
    assert not is_maximal_green(q, (2, 1, 0))
    assert is_reddening(q, (0, 1, 2)) and not is_reddening(q, (0, 1))


def test_shortest_search_is_lexicographically_first():
    assert search_reddening(linear(3), 6) == (0, 1, 2)


def test_change_of_initial_seed_on_a2():
    q = linear(2)
    F = dt_transform(q, (0, 1)).F_dt
    assert change_initial_seed(F, q, 0) == [parse("1 + X0 + X0*X1"), parse("1 + X1")]


def test_separation_on_a3():
    assert separation_check(linear(3), (1, 0, 2, 1))


def test_laurent_phenomenon_on_a2():
    x = laurent_cluster(linear(2), (0, 1, 0, 1, 0))
    assert sorted(c.to_text() for c in x) == ["X0", "X1"]


@settings(max_examples=40, deadline=None)
@given(quivers(max_n=4), st.lists(st.integers(0, 3), max_size=6))
def test_invariants_hold_along_walks(q, seq):
    s = initial_seed(q)
    for k in seq:
        if k < q.n:
            s = mutate_seed(s, k, check=True)
    assert s.n == q.n


@settings(max_examples=30, deadline=None)
@given(acyclic_quivers(max_n=4, max_mult=1))
def test_sources_first_is_maximal_green(q):
    order = topological_order(q)
    assert is_maximal_green(q, order)
    res = dt_transform(q, order)
    assert all(f.constant_term == 1 for f in res.F_dt)


@settings(max_examples=25, deadline=None)
@given(acyclic_quivers(min_n=2, max_n=4, max_mult=1), st.data())
def test_change_initial_seed_matches_direct_computation(q, data):
    k = data.draw(st.integers(0, q.n - 1))
    F = dt_transform(q, topological_order(q)).F_dt
    qk = q.mutate(k)
    seq = search_reddening(qk, 10)
    assert seq is not None
    assert change_initial_seed(F, q, k) == list(dt_transform(qk, seq).F_dt)


@settings(max_examples=25, deadline=None)
@given(acyclic_quivers(min_n=2, max_n=4), st.data())
def test_restriction_to_full_subquivers(q, data):
    keep = data.draw(st.lists(st.integers(0, q.n - 1), min_size=1, max_size=q.n - 1, unique=True))
    F = dt_transform(q, topological_order(q)).F_dt
    sub = full_subquiver(q, keep)
    direct = dt_transform(sub, topological_order(sub)).F_dt
    assert restrict_to_subquiver(F, keep) == list(direct)


def test_framed_markov_c_vectors_after_one_mutation():
    markov = Quiver.from_arrows(["1", "2", "3"], [("1", "2", 2), ("2", "3", 2), ("3", "1", 2)])
    s = mutate_seed(initial_seed(markov), 0)
    # c_i' = c_i + (|e_i1| c_1 + e_i1 |c_1|) / 2 with e_21 = -2, e_31 = 2
    assert s.C == ((-1, 0, 0), (0, 1, 0), (2, 0, 1))
