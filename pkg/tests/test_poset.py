from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dtposets.poly import Polynomial, RationalExpr, parse, substitute, var
from dtposets.poset import (ZERO_LABEL, InvalidPair, LabeledPoset, NotPointed, PieceNotPointed,
                            attach, chain, count_ideals, enumerate_ideals, ideal_function,
                            ideal_function_brute, ideal_function_eval, ideal_function_rational,
                            insert_element, is_isomorphic, opposite, parse_dot, pointed_factor,
                            relabel, renumber, search_simple_pointed_poset, truncate_zeros)
from strategies import posets


def test_chain_and_antichain():
    assert ideal_function(chain([0, 1])) == parse("1 + X0 + X0*X1")
    anti = LabeledPoset(range(2), [], {0: 0, 1: 1})
    assert ideal_function(anti) == (1 + var(0)) * (1 + var(1))


def test_covers_are_transitively_reduced():
    p = LabeledPoset(range(3), [(1, 0), (2, 1), (2, 0)], {0: 0, 1: 0, 2: 0})
    assert sorted(p.covers) == [(1, 0), (2, 1)]


def test_cycles_rejected():
    with pytest.raises(ValueError):
        LabeledPoset(range(2), [(0, 1), (1, 0)], {0: 0, 1: 0})


def test_diamond_ideals():
    p = LabeledPoset(range(4), [(1, 0), (2, 0), (3, 1), (3, 2)], {i: 0 for i in range(4)})
    assert count_ideals(p) == 6
    assert ideal_function(p) == parse("1 + X0 + 2*X0^2 + X0^3 + X0^4")


def test_pointed_factor():
    p = chain([2, 0, 1])
    lab, rest = pointed_factor(p)
    assert lab == 2 and ideal_function(rest) == ideal_function(chain([0, 1]))
    with pytest.raises(NotPointed):
        pointed_factor(LabeledPoset(range(2), [], {0: 0, 1: 0}))


def test_insert_requires_comparable_pair():
    with pytest.raises(InvalidPair):
        insert_element(LabeledPoset(range(2), [], {0: 0, 1: 1}), 1, 0, 2)


def test_attach_requires_pointed_pieces():
    two = LabeledPoset(range(2), [], {0: 0, 1: 0})
    with pytest.raises(PieceNotPointed):
        attach(chain([0]), 0, [(two, 1)])


def test_attach_substitutes_label():
    base = chain([0, 1])
    out = attach(base, 1, [(chain([2]), 2)])
    # each X1 element gets two copies of X2 above it
    assert ideal_function(out) == 1 + var(0) + var(0) * var(1) * (1 + var(2)) ** 2


def test_dot_round_trip():
    p = LabeledPoset(range(3), [(1, 0), (2, 0)], {0: 0, 1: ZERO_LABEL, 2: 1})
    assert parse_dot(p.to_dot()) == p


def test_structured_with_names():
    p = chain([0, 1])
    data = p.to_structured({0: "a", 1: "b"})
    assert data["elements"][0]["label"] == "Xa"
    assert LabeledPoset.from_structured(data, {"a": 0, "b": 1}) == p


def test_search_finds_chain_and_rejects_non_positive():
    found = search_simple_pointed_poset(parse("1 + X0 + X0*X1"), 4).found
    assert found is not None and ideal_function(found) == parse("1 + X0 + X0*X1")
    assert search_simple_pointed_poset(parse("1 + X0 - X0*X1"), 4).found is None


@settings(max_examples=80)
@given(posets())
def test_decomposition_matches_enumeration(p):
    assert ideal_function(p) == ideal_function_brute(p)
    assert count_ideals(p) == len(enumerate_ideals(p))


@given(posets())
def test_ideal_function_is_unital_and_positive(p):
    f = ideal_function(p)
    assert f.constant_term == 1
    assert all(c > 0 for c in f.coefficients())
    assert sum(f.coefficients()) == count_ideals(p)


@given(posets())
def test_opposite_poset_reverses_terms(p):
    # ideals of the opposite poset are complements of ideals, so F_op = X^P * F(1/X)
    f, g = ideal_function(p), ideal_function(opposite(p))
    full = {}
    for lab in p.labels.values():
        full[lab] = full.get(lab, 0) + 1
    flipped = Polynomial.from_terms((c, {v: full[v] - exps.get(v, 0) for v in full})
                                    for c, exps in f.terms())
    assert g == flipped


@given(posets(zeros=True))
def test_zero_truncation_keeps_ideal_function(p):
    assert ideal_function(truncate_zeros(p)) == ideal_function(p)


@given(posets(), st.integers(0, 3))
def test_relabel_is_substitution(p, v):
    f = ideal_function(p)
    g = ideal_function(relabel(p, {v: v + 1}))
    assert RationalExpr(g) == substitute(f, {v: var(v + 1)})


@settings(max_examples=40, deadline=None)
@given(posets(max_size=6), st.data())
def test_insertion_preserves_ideal_function(p, data):
    pairs = [(i, j) for i in p.elements for j in p.elements if p.less(j, i)]
    if not pairs:
        return
    i, j = data.draw(st.sampled_from(pairs))
    q = insert_element(p, i, j, 3)
    assert ideal_function_rational(q) == RationalExpr(ideal_function(p))
    point = {v: Fraction(v + 2, 3) for v in range(4)}
    assert ideal_function_eval(q, point) == ideal_function(p).evaluate(point)


@given(posets(max_size=6))
def test_renumbering_is_an_isomorphism(p):
    assert is_isomorphic(p, renumber(p, 10))
