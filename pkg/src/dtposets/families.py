"""Labeled posets built from quivers and triangulations, plus the Q_n box posets.

Triangulation conventions
-------------------------
A triangle is a triple of arc ids ``(s0, s1, s2)`` listed counterclockwise.
Corner ``(t, i)`` is the corner between sides ``s_i`` and ``s_{i+1}``.
Turning counterclockwise about that corner's marked point we pass from
``s_{i+1}`` to ``s_i``; crossing ``s_i`` lands in the other triangle that
contains it, at the corner just before its slot::

          s_{i+1}
           \\   t
            \\___ s_i ___
    (t, i) *    t'
            ``(t', m-1)`` where t'[m] == s_i

Following these links gives the counterclockwise order of arcs at every
marked point: a cycle at a puncture, a chain between two boundary arcs at
a boundary point.

Q_n conventions
---------------
Vertices are triples ``(a, b, c)`` with ``a + b + c = n - 3``, listed row by
row from the top (``c`` decreasing) and left to right (``a`` decreasing).
Arrows follow the three unit moves in :data:`QN_MOVES`; the sign
:data:`QN_ORIENTATION` flips all of them at once.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Sequence

from .poset import LabeledPoset, PosetError
from .quiver import Quiver, QuiverError, topological_order


class NotAcyclic(QuiverError):
    pass


class InvalidTriangulation(ValueError):
    pass


class NotAdmissible(ValueError):
    pass


class OutOfSimplex(ValueError):
    pass


# ---------------------------------------------------------------------------
# acyclic quivers


def ascendant_tree(q: Quiver, i: int) -> LabeledPoset:
    """Poset of oriented paths ending at ``i``; a path covers its one-step extensions' targets.

    The root is the idle path at ``i``.  A path starting at ``j`` has one
    child per arrow ``k -> j`` (multiplicity counted), labeled ``X_k``.
    """
    q = q.mutable_part()
    if topological_order(q) is None:
        raise NotAcyclic("ascendant trees need an acyclic quiver")
    labels = {0: i}
    covers = []
    stack = [(0, i)]
    while stack:
        node, j = stack.pop()
        for k in range(q.n):
            for _ in range(max(q.eps[k][j], 0)):
                child = len(labels)
                labels[child] = k
                covers.append((child, node))
                stack.append((child, k))
    return LabeledPoset(range(len(labels)), covers, labels)


# ---------------------------------------------------------------------------
# triangulations


@dataclass(frozen=True)
class Triangulation:
    arcs: tuple[tuple[Hashable, bool], ...]
    triangles: tuple[tuple[Hashable, Hashable, Hashable], ...]
    _slots: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple((a, bool(b)) for a, b in self.arcs))
        object.__setattr__(self, "triangles", tuple(tuple(t) for t in self.triangles))
        ids = [a for a, _ in self.arcs]
        if len(set(ids)) != len(ids):
            raise InvalidTriangulation("duplicate arc ids")
        boundary = dict(self.arcs)
        slots: dict = {a: [] for a in ids}
        for t, tri in enumerate(self.triangles):
            if len(tri) != 3:
                raise InvalidTriangulation(f"triangle {tri} does not have three sides")
            if len(set(tri)) != 3:
                raise InvalidTriangulation(f"triangle {tri} is self-folded")
            for pos, a in enumerate(tri):
                if a not in slots:
                    raise InvalidTriangulation(f"unknown arc {a!r}")
                slots[a].append((t, pos))
        for a in ids:
            want = 1 if boundary[a] else 2
            if len(slots[a]) != want:
                raise InvalidTriangulation(f"arc {a!r} occurs {len(slots[a])} times, expected {want}")
        object.__setattr__(self, "_slots", slots)

    @classmethod
    def from_structured(cls, data: dict) -> "Triangulation":
        return cls(tuple((a["id"], a.get("boundary", False)) for a in data["arcs"]),
                   tuple(tuple(t) for t in data["triangles"]))

    def to_structured(self) -> dict:
        return {"arcs": [{"id": a, "boundary": b} for a, b in self.arcs],
                "triangles": [list(t) for t in self.triangles]}

    def is_boundary(self, a) -> bool:
        return dict(self.arcs)[a]

    def interior_arcs(self) -> list:
        return [a for a, b in self.arcs if not b]

    # corner graph -------------------------------------------------------
    def _next_corner(self, corner):
        """Counterclockwise neighbour of a corner, or None at the boundary."""
        t, i = corner
        side = self.triangles[t][i]
        for t2, m in self._slots[side]:
            if (t2, m) != (t, i):
                return (t2, (m - 1) % 3)
        return None

    def marked_points(self) -> list[dict]:
        """Each marked point as ``{"kind", "arcs"}`` with arcs in counterclockwise order.

        For a puncture ``arcs`` is cyclic; for a boundary point it runs from
        one boundary arc to the other.
        """
        seen = set()
        points = []
        corners = [(t, i) for t in range(len(self.triangles)) for i in range(3)]
        prev = {}
        for c in corners:
            nxt = self._next_corner(c)
            if nxt is not None:
                prev[nxt] = c
        for c in corners:
            if c in seen:
                continue
            start = c
            while start in prev and prev[start] != c:
                start = prev[start]
            if start in prev:
                # went all the way round: a puncture
                cycle = [c]
                cur = self._next_corner(c)
                while cur != c:
                    cycle.append(cur)
                    cur = self._next_corner(cur)
                seen.update(cycle)
                arcs = [self.triangles[t][(i + 1) % 3] for t, i in cycle]
                points.append({"kind": "puncture", "arcs": arcs, "corners": cycle})
            else:
                chain = [start]
                cur = self._next_corner(start)
                while cur is not None:
                    chain.append(cur)
                    cur = self._next_corner(cur)
                seen.update(chain)
                arcs = [self.triangles[t][(i + 1) % 3] for t, i in chain]
                last_t, last_i = chain[-1]
                arcs.append(self.triangles[last_t][last_i])
                points.append({"kind": "boundary", "arcs": arcs, "corners": chain})
        return points

    def endpoints(self) -> dict:
        """Arc id -> pair of marked-point indices."""
        where = {}
        for p, point in enumerate(self.marked_points()):
            for c in point["corners"]:
                where[c] = p
        out = {}
        for a, _ in self.arcs:
            t, m = self._slots[a][0]
            out[a] = (where[(t, (m - 1) % 3)], where[(t, m)])
        return out


def quiver_from_triangulation(tri: Triangulation) -> Quiver:
    """One vertex per interior arc; each triangle adds a counterclockwise 3-cycle."""
    arcs = tri.interior_arcs()
    index = {a: i for i, a in enumerate(arcs)}
    n = len(arcs)
    eps = [[0] * n for _ in range(n)]
    for t in tri.triangles:
        for i in range(3):
            s, u = t[i], t[(i + 1) % 3]
            if s in index and u in index:
                eps[index[s]][index[u]] += 1
                eps[index[u]][index[s]] -= 1
    return Quiver(tuple(map(tuple, eps)), n, tuple(str(a) for a in arcs))


def _point_info(tri: Triangulation):
    points = tri.marked_points()
    ends = tri.endpoints()
    boundary_arcs = [a for a, b in tri.arcs if b]
    # boundary components: union boundary points joined by boundary arcs
    parent = list(range(len(points)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in boundary_arcs:
        u, v = ends[a]
        parent[find(u)] = find(v)
    comp_size: dict = {}
    for p, point in enumerate(points):
        if point["kind"] == "boundary":
            comp_size[find(p)] = comp_size.get(find(p), 0) + 1
    admissible = []
    for p, point in enumerate(points):
        loops = any(ends[a] == (p, p) for a in point["arcs"])
        if point["kind"] == "puncture":
            ok = not loops and len(point["arcs"]) >= 3
        else:
            ok = not loops and comp_size[find(p)] >= 2
        admissible.append(ok)
    return points, ends, admissible


def admissible_arcs(tri: Triangulation) -> dict:
    """Interior arc id -> case (1 boundary-boundary, 2 boundary-puncture, 3 puncture-puncture)."""
    points, ends, admissible = _point_info(tri)
    out = {}
    for a in tri.interior_arcs():
        u, v = ends[a]
        if u == v or not (admissible[u] and admissible[v]):
            continue
        if sum(1 for b, _ in tri.arcs if set(ends[b]) == {u, v}) != 1:
            continue
        kinds = sorted(points[p]["kind"] for p in (u, v))
        out[a] = {("boundary", "boundary"): 1, ("boundary", "puncture"): 2,
                  ("puncture", "puncture"): 3}[tuple(kinds)]
    return out


def _after(point: dict, a) -> list:
    """Arcs met after ``a`` turning counterclockwise at ``point``."""
    arcs = point["arcs"]
    i = arcs.index(a)
    if point["kind"] == "puncture":
        return arcs[i + 1:] + arcs[:i]
    return arcs[i + 1:-1]


def surface_arc_poset(tri: Triangulation, a) -> LabeledPoset:
    """The labeled poset of an admissible arc, one of three shapes."""
    cases = admissible_arcs(tri)
    if a not in cases:
        raise NotAdmissible(f"arc {a!r} is not admissible")
    case = cases[a]
    points, ends, _ = _point_info(tri)
    u, v = ends[a]
    if points[u]["kind"] == "puncture" and points[v]["kind"] == "boundary":
        u, v = v, u
    index = {x: i for i, x in enumerate(tri.interior_arcs())}
    bs = [index[x] for x in _after(points[u], a)]
    cs = [index[x] for x in _after(points[v], a)]
    lab = index[a]
    if case == 2 and not bs:
        return _two_chains(lab, [], cs[:-1], [])
    extra = []
    if case in (2, 3):
        extra.append(("c", len(cs), "b", 1))
    if case == 3:
        extra.append(("b", len(bs), "c", 1))
    return _two_chains(lab, bs, cs, extra, top=(case == 3))


def _two_chains(a: int, bs: Sequence[int], cs: Sequence[int], extra, top: bool = False) -> LabeledPoset:
    labels = {0: a}
    covers = []
    pos = {}
    for name, chain in (("b", bs), ("c", cs)):
        below = 0
        for k, lab in enumerate(chain, start=1):
            e = len(labels)
            labels[e] = lab
            pos[(name, k)] = e
            covers.append((e, below))
            below = e
    for n1, k1, n2, k2 in extra:
        covers.append((pos[(n1, k1)], pos[(n2, k2)]))
    if top:
        e = len(labels)
        labels[e] = a
        covers += [(e, pos[("c", len(cs))]), (e, pos[("b", len(bs))])]
    return LabeledPoset(range(len(labels)), covers, labels)


# ---------------------------------------------------------------------------
# Q_n

QN_MOVES = ((1, -1, 0), (-1, 0, 1), (0, 1, -1))
QN_ORIENTATION = 1


def qn_vertices(n: int) -> list[tuple[int, int, int]]:
    if n < 3:
        raise ValueError("Q_n needs n >= 3")
    out = []
    for c in range(n - 3, -1, -1):
        for a in range(n - 3 - c, -1, -1):
            out.append((a, n - 3 - c - a, c))
    return out


def qn_name(v: tuple[int, int, int]) -> str:
    return "({},{},{})".format(*v)


def qn_index(n: int) -> dict:
    return {v: i for i, v in enumerate(qn_vertices(n))}


def _qn_arrows(n: int):
    verts = set(qn_vertices(n))
    for v in qn_vertices(n):
        for d in QN_MOVES:
            w = (v[0] + d[0], v[1] + d[1], v[2] + d[2])
            if w in verts:
                yield (v, w) if QN_ORIENTATION > 0 else (w, v)


@lru_cache(maxsize=None)
def qn_quiver(n: int) -> Quiver:
    verts = qn_vertices(n)
    return Quiver.from_arrows([qn_name(v) for v in verts],
                              [(qn_name(s), qn_name(t)) for s, t in _qn_arrows(n)])


def j_set(n: int, v: tuple[int, int, int]) -> tuple[int, ...]:
    a, b, c = v
    return tuple(sorted(set(range(1, a + 2)) | set(range(n - c, n + 1))))


def frozen_faces(n: int) -> list[tuple[str, tuple[int, ...]]]:
    """Names and J-sets of the frozen faces: right edge top to bottom, then bottom edge left to right."""
    right = [(f"R{k}", tuple(range(k + 1, n + 1))) for k in range(1, n)]
    bottom = [(f"B{k}", tuple(range(1, n - k + 1))) for k in range(1, n)]
    return right + bottom


@lru_cache(maxsize=None)
def qn_extended(n: int) -> Quiver:
    """Q_n with frozen faces along the right and bottom edges of the triangle.

    The right-edge face ``R_k`` sits between mutable faces ``(0, k-1, n-2-k)``
    and ``(0, k-2, n-1-k)``; the bottom-edge face ``B_k`` between
    ``(n-2-k, k-1, 0)`` and ``(n-1-k, k-2, 0)``.
    """
    verts = set(qn_vertices(n))
    arrows = [(qn_name(s), qn_name(t)) for s, t in _qn_arrows(n)]
    extra = []
    for k in range(1, n):
        r, b = f"R{k}", f"B{k}"
        up = (0, k - 1, n - 2 - k)
        down = (0, k - 2, n - 1 - k)
        if up in verts:
            extra.append((qn_name(up), r))
        if down in verts:
            extra.append((r, qn_name(down)))
        left = (n - 2 - k, k - 1, 0)
        right = (n - 1 - k, k - 2, 0)
        if left in verts:
            extra.append((b, qn_name(left)))
        if right in verts:
            extra.append((qn_name(right), b))
    if QN_ORIENTATION < 0:
        extra = [(t, s) for s, t in extra]
    mutable = [qn_name(v) for v in qn_vertices(n)]
    return Quiver.from_arrows(mutable, arrows + extra, [name for name, _ in frozen_faces(n)])


def lift3d_coords(n: int, a: int, b: int, c: int) -> list[tuple[int, int, int]]:
    if min(a, b, c) < 0 or a + b + c != n - 3:
        raise OutOfSimplex(f"({a},{b},{c}) is not a vertex of Q_{n}")
    return [(x, y, z) for x in range(c + 1) for y in range(a + 1) for z in range(b + 1)]


def lift_projection(v: tuple[int, int, int], point: tuple[int, int, int]) -> tuple[int, int, int]:
    a, b, c = v
    x, y, z = point
    return (a + x - y, b + y - z, c - x + z)


def lift3d_poset(n: int, a: int, b: int, c: int) -> LabeledPoset:
    """Box poset over the hexagonal span of ``(a, b, c)``, labeled through the projection."""
    coords = lift3d_coords(n, a, b, c)
    ids = {p: i for i, p in enumerate(coords)}
    index = qn_index(n)
    eps = qn_quiver(n).eps
    v = (a, b, c)
    labels = {}
    covers = []
    for p, i in ids.items():
        labels[i] = index[lift_projection(v, p)]
        for d in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            r = (p[0] + d[0], p[1] + d[1], p[2] + d[2])
            if r not in ids:
                continue
            e = eps[index[lift_projection(v, r)]][labels[i]]
            if e == 1:
                covers.append((ids[r], i))
            elif e == -1:
                covers.append((i, ids[r]))
            else:
                raise PosetError(f"no single arrow between the images of {p} and {r}")
    return LabeledPoset(range(len(coords)), covers, labels)


def qn_green_triples(n: int) -> list[tuple[int, int, int]]:
    """Sweeps ``k_0, ..., k_{n-3}``, then the same for Q_{n-1} shifted to ``a >= 1``."""
    if n < 3:
        return []
    out = []
    for a in range(n - 2):
        out += [(n - a - 3, a - j, j) for j in range(a + 1)]
    out += [(x + 1, y, z) for x, y, z in qn_green_triples(n - 1)]
    return out


def qn_maximal_green(n: int) -> tuple[int, ...]:
    index = qn_index(n)
    return tuple(index[v] for v in qn_green_triples(n))


def qn_mirror(n: int) -> tuple[int, ...]:
    """Permutation swapping ``a`` and ``b``."""
    index = qn_index(n)
    return tuple(index[(b, a, c)] for a, b, c in qn_vertices(n))
