"""Hypothesis strategies shared by the test modules."""
from __future__ import annotations

from hypothesis import strategies as st

from dtposets.poly import Polynomial
from dtposets.poset import LabeledPoset
from dtposets.quiver import Quiver

monomials = st.dictionaries(st.integers(0, 3), st.integers(1, 3), max_size=3)


@st.composite
def polynomials(draw, max_terms=5, coeffs=st.integers(-4, 4)):
    terms = draw(st.lists(st.tuples(coeffs, monomials), max_size=max_terms))
    return Polynomial.from_terms(terms)


@st.composite
def skew_matrices(draw, min_n=1, max_n=5, entries=(-1, 0, 0, 1)):
    n = draw(st.integers(min_n, max_n))
    eps = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a = draw(st.sampled_from(entries))
            eps[i][j], eps[j][i] = a, -a
    return eps


@st.composite
def quivers(draw, min_n=1, max_n=5, entries=(-1, 0, 0, 1)):
    eps = draw(skew_matrices(min_n, max_n, entries))
    return Quiver(eps, len(eps), tuple(str(i + 1) for i in range(len(eps))))


@st.composite
def acyclic_quivers(draw, min_n=1, max_n=4, max_mult=2):
    """Arrows only go from lower to higher index, so the quiver is acyclic."""
    n = draw(st.integers(min_n, max_n))
    eps = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a = draw(st.integers(0, max_mult)) if draw(st.booleans()) else 0
            eps[i][j], eps[j][i] = a, -a
    perm = draw(st.permutations(range(n)))
    eps = [[eps[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    return Quiver(eps, n, tuple(str(i + 1) for i in range(n)))


@st.composite
def posets(draw, max_size=7, n_vars=4, zeros=False):
    """Random labeled posets: each element sits above a random subset of earlier ones."""
    size = draw(st.integers(1, max_size))
    rel = []
    for e in range(1, size):
        below = draw(st.lists(st.integers(0, e - 1), max_size=2, unique=True))
        rel += [(e, b) for b in below]
    labels = {}
    for e in range(size):
        labels[e] = draw(st.integers(0, n_vars - 1))
    if zeros:
        from dtposets.poset import ZERO_LABEL
        for e in draw(st.lists(st.integers(0, size - 1), max_size=2, unique=True)):
            labels[e] = ZERO_LABEL
    return LabeledPoset(range(size), rel, labels)
