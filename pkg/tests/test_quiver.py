from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from dtposets.quiver import (EmptySubset, FrozenMutation, NegativeDelta, Quiver, QuiverError,
                             find_isomorphism, full_subquiver, is_isomorphism, mutate,
                             mutate_matrix, topological_order, triangular_extension,
                             with_principal_coefficients)
from strategies import quivers, skew_matrices


def test_a3_mutation():
    q = Quiver.from_arrows(["1", "2", "3"], [("1", "2"), ("2", "3")])
    m = q.mutate(1)
    assert sorted(m.arrows()) == [(0, 2, 1), (1, 0, 1), (2, 1, 1)]


def test_markov_is_mutation_invariant():
    q = Quiver.from_arrows(["1", "2", "3"], [("1", "2", 2), ("2", "3", 2), ("3", "1", 2)])
    for k in range(3):
        assert find_isomorphism(q.mutate(k), q) is not None


def test_frozen_vertices_cannot_mutate():
    q = with_principal_coefficients(Quiver.from_arrows(["1", "2"], [("1", "2")]))
    assert q.n == 4 and q.n_frozen == 2
    with pytest.raises(FrozenMutation):
        mutate(q, 3)


def test_bad_inputs_rejected():
    with pytest.raises(QuiverError):
        Quiver(((0, 1), (0, 0)), 2)
    with pytest.raises(QuiverError):
        Quiver.from_arrows(["1"], [("1", "1")])
    with pytest.raises(EmptySubset):
        full_subquiver(Quiver.from_arrows(["1"], []), [])


def test_structured_round_trip():
    q = Quiver.from_arrows(["a", "b"], [("a", "b", 3), ("b", "f")], frozen=["f"])
    assert Quiver.from_structured(q.to_structured()) == q


def test_dot_lists_multiplicities():
    dot = Quiver.from_arrows(["a", "b"], [("a", "b", 2)]).to_dot()
    assert 'v0 -> v1 [label="2"]' in dot


def test_topological_order_puts_sources_first():
    q = Quiver.from_arrows(["1", "2", "3"], [("3", "1"), ("1", "2")])
    assert topological_order(q) == [2, 0, 1]
    cyc = Quiver.from_arrows(["1", "2", "3"], [("1", "2"), ("2", "3"), ("3", "1")])
    assert topological_order(cyc) is None


def test_triangular_extension_blocks():
    a = Quiver.from_arrows(["1"], [])
    b = Quiver.from_arrows(["2", "3"], [("2", "3")])
    t = triangular_extension(a, b, [[1, 2]])
    assert t.eps[0] == (0, 1, 2)
    assert full_subquiver(t, [1, 2]).eps == b.eps
    with pytest.raises(NegativeDelta):
        triangular_extension(a, b, [[-1, 0]])


@given(skew_matrices(entries=(-2, -1, 0, 1, 2)), st.data())
def test_mutation_is_an_involution(eps, data):
    k = data.draw(st.integers(0, len(eps) - 1))
    assert mutate_matrix(mutate_matrix(tuple(map(tuple, eps)), k), k) == tuple(map(tuple, eps))


@given(skew_matrices(entries=(-2, -1, 0, 1, 2)), st.data())
def test_mutation_keeps_skew_symmetry(eps, data):
    k = data.draw(st.integers(0, len(eps) - 1))
    Quiver(mutate_matrix(tuple(map(tuple, eps)), k), len(eps))


@given(quivers(), st.data())
def test_relabelled_quiver_is_isomorphic(q, data):
    perm = data.draw(st.permutations(range(q.n)))
    eps = [[0] * q.n for _ in range(q.n)]
    for i in range(q.n):
        for j in range(q.n):
            eps[perm[i]][perm[j]] = q.eps[i][j]
    q2 = Quiver(eps, q.n)
    found = find_isomorphism(q, q2)
    assert found is not None and is_isomorphism(q, q2, found)


@given(quivers(min_n=2), st.data())
def test_subquiver_commutes_with_mutation_away_from_it(q, data):
    keep = data.draw(st.lists(st.integers(0, q.n - 1), min_size=1, max_size=q.n - 1, unique=True))
    outside = [k for k in range(q.n) if k not in keep]
    k = data.draw(st.sampled_from(outside))
    if any(q.eps[k][i] for i in keep):
        return
    assert full_subquiver(q.mutate(k), keep).eps == full_subquiver(q, keep).eps


def test_markov_mutation_reverses_every_arrow_pair():
    q = Quiver.from_arrows(["1", "2", "3"], [("1", "2", 2), ("2", "3", 2), ("3", "1", 2)])
    m = q.mutate(0)
    assert (m.eps[0][1], m.eps[1][2], m.eps[2][0]) == (-2, -2, -2)


def test_reversed_markov_is_a_transposition():
    from dtposets.quiver import reversed_quiver
    q = Quiver.from_arrows(["1", "2", "3"], [("1", "2", 2), ("2", "3", 2), ("3", "1", 2)])
    assert find_isomorphism(reversed_quiver(q), q) == (0, 2, 1)
