"""Named example quivers and triangulations, with their stored sequences and posets.

Sequences that are slow to find by search are stored here; the tests
re-verify each one (reddening, green where claimed) before using it.
"""
from __future__ import annotations

import itertools

from .families import Triangulation
from .poly import Polynomial, parse
from .poset import LabeledPoset
from .quiver import Quiver


def _names(q: Quiver) -> dict[str, int]:
    return {name: i for i, name in enumerate(q.names)}


# ---------------------------------------------------------------------------
# a quiver whose DT F-polynomial at one vertex is not an ideal function

def twice_punctured_disk() -> Quiver:
    return Quiver.from_arrows(["1", "2", "3", "4", "5"],
                              [("2", "5"), ("5", "1"), ("1", "2"), ("5", "4"),
                               ("4", "2"), ("5", "3"), ("3", "2")])


TWICE_PUNCTURED_SEQUENCE = ("5", "1", "3", "4", "2", "5")

TWICE_PUNCTURED_F2 = (
    "1 + X2 + X1*X2 + X2*X3 + X2*X4 + X1*X2*X3 + X1*X2*X4 + X2*X3*X4 + X1*X2*X3*X4"
    " + X1*X2*X3*X5 + X1*X2*X4*X5 + X2*X3*X4*X5 + 2*X1*X2*X3*X4*X5 + X1*X2*X3*X4*X5^2")


def twice_punctured_f2() -> Polynomial:
    return parse(TWICE_PUNCTURED_F2, _names(twice_punctured_disk()))


def indices(q: Quiver, seq) -> tuple[int, ...]:
    return tuple(q.index(v) for v in seq)


# ---------------------------------------------------------------------------
# small acyclic quiver with a double arrow

def double_arrow_quiver() -> Quiver:
    return Quiver.from_arrows(["1", "2", "3"], [("2", "1"), ("1", "3"), ("2", "3", 2)])


DOUBLE_ARROW_F = {"1": "1 + X1 + X1*X2", "2": "1 + X2"}


def double_arrow_f3_poset() -> LabeledPoset:
    """X3 at the bottom; above it a chain X1 < X2 and two separate X2."""
    return LabeledPoset(range(5), [(1, 0), (2, 1), (3, 0), (4, 0)],
                        {0: 2, 1: 0, 2: 1, 3: 1, 4: 1})


# ---------------------------------------------------------------------------
# a 3-cycle glued onto the hexagon around the centre of Q_6

FLAG_ARROWS = [(2, 0), (0, 5), (6, 0), (0, 3), (4, 0), (0, 1), (1, 6), (5, 6),
               (1, 2), (3, 2), (3, 4), (5, 4)]
CYCLE_ARROWS = [(7, 8), (8, 9), (9, 7)]
GLUE_ARROWS = [(7, 1), (8, 3), (9, 5)]

# green sequence: the 3-cycle first, then the hexagon (each block searched separately, ~25 s)
GLUED_SEQUENCE = (7, 8, 9, 7, 0, 1, 2, 0, 3, 4, 5, 6, 0, 2, 1, 6)


def glued_quiver() -> Quiver:
    return Quiver.from_arrows(range(10), FLAG_ARROWS + CYCLE_ARROWS + GLUE_ARROWS)


def glued_vertex0_poset() -> LabeledPoset:
    """Cube of eight elements over the hexagon, with a two-element chain on X1, X3, X5."""
    labels = {0: 0, 1: 4, 2: 3, 3: 2, 4: 5, 5: 6, 6: 1, 7: 0,
              8: 7, 9: 9, 10: 8, 11: 7, 12: 9, 13: 8}
    covers = [(3, 0), (7, 4), (5, 0), (7, 2), (1, 0), (7, 6), (6, 5), (4, 5),
              (6, 3), (2, 3), (2, 1), (4, 1),
              (9, 8), (8, 6), (11, 10), (10, 2), (13, 12), (12, 4)]
    return LabeledPoset(range(14), covers, labels)


# ---------------------------------------------------------------------------
# Markov quiver and its double cover

def markov_quiver() -> Quiver:
    return Quiver.from_arrows(["1", "2", "3"], [("1", "2", 2), ("2", "3", 2), ("3", "1", 2)])


def markov_cover() -> Quiver:
    """Two copies of each Markov vertex, one arrow between every lifted pair."""
    verts = ["1", "1'", "2", "2'", "3", "3'"]
    arrows = [(i + a, j + b) for i, j in (("1", "2"), ("2", "3"), ("3", "1"))
              for a in ("", "'") for b in ("", "'")]
    return Quiver.from_arrows(verts, arrows)


def markov_fold(q: Quiver) -> dict[int, int]:
    """Cover vertex index -> Markov vertex index (by the first character of the name)."""
    return {i: int(name[0]) - 1 for i, name in enumerate(q.names)}


def markov_poset() -> LabeledPoset:
    """X1 at both ends, two X3 above the bottom, two X2 below the top, complete between."""
    return LabeledPoset(range(6), [(1, 0), (2, 0), (3, 1), (3, 2), (4, 1), (4, 2), (5, 3), (5, 4)],
                        {0: 0, 1: 2, 2: 2, 3: 1, 4: 1, 5: 0})


# ---------------------------------------------------------------------------
# triangulations

def polygon(n: int, diagonals) -> Triangulation:
    """Triangulated convex ``n``-gon with vertices ``0..n-1`` counterclockwise."""
    sides = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    edges = sides | {tuple(sorted(d)) for d in diagonals}

    def name(e):
        return ("e{}_{}" if e in sides else "d{}_{}").format(*e)

    arcs = tuple((name(e), e in sides) for e in sorted(edges))
    tris = tuple((name((i, j)), name((j, k)), name((i, k)))
                 for i, j, k in itertools.combinations(range(n), 3)
                 if {(i, j), (j, k), (i, k)} <= edges)
    return Triangulation(arcs, tris)


def fan(n: int) -> Triangulation:
    return polygon(n, [(0, j) for j in range(2, n - 1)])


def tetrahedron() -> Triangulation:
    """Sphere with four punctures, triangulated as the boundary of a tetrahedron."""
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    arcs = tuple((f"e{i}{j}", False) for i, j in pairs)
    faces = ((1, 2, 3), (1, 3, 4), (1, 4, 2), (2, 4, 3))

    def e(i, j):
        return "e{}{}".format(*sorted((i, j)))

    return Triangulation(arcs, tuple((e(a, b), e(b, c), e(c, a)) for a, b, c in faces))


# green sequence for the tetrahedron quiver, in the order of its arcs (found by search, ~9 s)
TETRAHEDRON_SEQUENCE = (0, 1, 2, 0, 3, 4, 5, 1, 3, 0, 2, 1)


def annulus() -> Triangulation:
    """Annulus with one marked point per boundary circle; the quiver is Kronecker."""
    return Triangulation((("o", True), ("i", True), ("x", False), ("y", False)),
                         (("o", "x", "y"), ("i", "x", "y")))


def punctured_polygon(n: int, spokes=None) -> Triangulation:
    """``n``-gon with one puncture joined to the boundary vertices in ``spokes``.

    Each gap between consecutive spokes ``u, v`` gets the triangle on the
    puncture, ``u`` and ``v``; the rest of the gap is fanned out from ``u``.
    """
    spokes = sorted(set(range(n) if spokes is None else spokes))
    if len(spokes) < 2:
        raise ValueError("need at least two spokes")
    arcs = {f"e{i}": True for i in range(n)}
    arcs.update({f"p{v}": False for v in spokes})
    tris = []

    def side(i, j):
        if (j - i) % n == 1:
            return f"e{i}"
        arcs[f"d{i}_{j}"] = False
        return f"d{i}_{j}"

    for u, v in zip(spokes, spokes[1:] + spokes[:1]):
        tris.append((side(u, v), f"p{v}", f"p{u}"))
        gap = (v - u) % n
        for t in range(1, gap):
            j, k = (u + t) % n, (u + t + 1) % n
            tris.append((side(u, j), f"e{j}", side(u, k)))
    return Triangulation(tuple(arcs.items()), tuple(tris))


def local_two_puncture_quiver() -> Quiver:
    """Five arcs around an arc ``a`` joining two punctures of degree three."""
    return Quiver.from_arrows(["a", "b1", "b2", "c1", "c2"],
                              [("c1", "a"), ("c2", "c1"), ("a", "c2"), ("b1", "a"),
                               ("b2", "b1"), ("a", "b2"), ("c2", "b1"), ("b2", "c1")])


LOCAL_TWO_PUNCTURE_SEQUENCE = ("a", "b1", "b2", "c1", "c2", "a", "b1", "c1")
