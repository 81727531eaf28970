"""The oriented tripod web on the n-triangulated triangle and its path families.

Embedding
---------
White vertex ``w(r, p)`` (``0 <= p <= r <= n-1``) is lattice point ``p`` of
row ``r``, drawn at ``(2p - r, -3r)``.  Black vertex ``T(r, p)`` sits inside
the upward lattice triangle with apex ``w(r, p)``, at ``(2p - r, -3r - 2)``.
Edges point down the vertical leg ``w(r,p) -> T(r,p)`` and left to right on
the two slanted legs.  Source ``i`` enters at the left edge of the triangle
(``w(i-1, 0)``), sink ``j`` leaves at the right edge (``w(j-1, j-1)``).

Interior faces are the downward lattice triangles; the one below row ``r``
starting at column ``p`` is the Q_n vertex ``(r-1-p, p, n-2-r)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .families import OutOfSimplex, frozen_faces, j_set, lift3d_poset, qn_extended, qn_index, qn_name, qn_vertices
from .poly import Laurent, Polynomial, RationalExpr, exact_div

BELOW = "below"
ABOVE = "above"


class NotUnital(ValueError):
    pass


class IdentityViolation(AssertionError):
    pass


@dataclass(frozen=True)
class WebNetwork:
    n: int
    coords: tuple[tuple[int, int], ...]
    kinds: tuple[str, ...]
    out_edges: tuple[tuple[int, ...], ...]
    sources: tuple[int, ...]          # sources[i-1] is the vertex fed by source i
    sinks: tuple[int, ...]            # sinks[j-1] is the vertex feeding sink j
    faces: tuple[tuple[int, int, int], ...]
    centroids: tuple[tuple[int, int], ...]

    @property
    def n_vertices(self) -> int:
        return len(self.coords)

    def face_index(self, v: tuple[int, int, int]) -> int:
        return self.faces.index(tuple(v))

    def is_acyclic(self) -> bool:
        indeg = [0] * self.n_vertices
        for outs in self.out_edges:
            for t in outs:
                indeg[t] += 1
        ready = [i for i, d in enumerate(indeg) if d == 0]
        seen = 0
        while ready:
            i = ready.pop()
            seen += 1
            for t in self.out_edges[i]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
        return seen == self.n_vertices


@dataclass(frozen=True)
class PathFamily:
    paths: tuple[tuple[int, ...], ...]
    sources: tuple[int, ...]
    sinks: tuple[int, ...]


@lru_cache(maxsize=None)
def build_web(n: int) -> WebNetwork:
    if n < 3:
        raise ValueError("the web needs n >= 3")
    ids: dict = {}
    coords, kinds = [], []

    def add(key, xy, kind):
        ids[key] = len(coords)
        coords.append(xy)
        kinds.append(kind)

    for r in range(n):
        for p in range(r + 1):
            add(("w", r, p), (2 * p - r, -3 * r), "white")
    for r in range(n - 1):
        for p in range(r + 1):
            add(("T", r, p), (2 * p - r, -3 * r - 2), "black")
    outs: list[list[int]] = [[] for _ in coords]
    for r in range(n):
        for p in range(r + 1):
            w = ids[("w", r, p)]
            if r <= n - 2:
                outs[w].append(ids[("T", r, p)])
            if p <= r - 1:
                outs[w].append(ids[("T", r - 1, p)])
    for r in range(n - 1):
        for p in range(r + 1):
            outs[ids[("T", r, p)]].append(ids[("w", r + 1, p + 1)])
    faces, cents = [], []
    index = qn_index(n)
    for r in range(1, n - 1):
        for p in range(r):
            faces.append((r - 1 - p, p, n - 2 - r))
            cents.append((2 * p + 1 - r, -3 * r - 1))
    order = sorted(range(len(faces)), key=lambda i: index[faces[i]])
    return WebNetwork(
        n=n,
        coords=tuple(coords),
        kinds=tuple(kinds),
        out_edges=tuple(tuple(o) for o in outs),
        sources=tuple(ids[("w", i, 0)] for i in range(n)),
        sinks=tuple(ids[("w", j, j)] for j in range(n)),
        faces=tuple(faces[i] for i in order),
        centroids=tuple(cents[i] for i in order),
    )


def _paths_from(W: WebNetwork, start: int, targets: set[int]) -> list[tuple[int, ...]]:
    out = []
    path = [start]

    def walk(v):
        if v in targets:
            out.append(tuple(path))
        for t in W.out_edges[v]:
            path.append(t)
            walk(t)
            path.pop()

    walk(start)
    return out


def _path_end(W: WebNetwork, path) -> int:
    return W.sinks.index(path[-1]) + 1


def path_families(W: WebNetwork, I: Sequence[int], J: Sequence[int]) -> list[PathFamily]:
    """Every family of pairwise vertex-disjoint paths from sources ``I`` onto sinks ``J``."""
    I, J = tuple(sorted(I)), tuple(sorted(J))
    if len(I) != len(J):
        raise ValueError("|I| must equal |J|")
    sink_vertices = {W.sinks[j - 1] for j in J}
    options = [_paths_from(W, W.sources[i - 1], sink_vertices) for i in I]
    out = []
    chosen: list[tuple[int, ...]] = []
    used: set[int] = set()
    ends: set[int] = set()

    def extend(k):
        if k == len(I):
            paths = tuple(chosen)
            out.append(PathFamily(paths, I, tuple(_path_end(W, p) for p in paths)))
            return
        for path in options[k]:
            if path[-1] in ends or used.intersection(path):
                continue
            chosen.append(path)
            used.update(path)
            ends.add(path[-1])
            extend(k + 1)
            ends.discard(path[-1])
            used.difference_update(path)
            chosen.pop()

    extend(0)
    return out


def path_count_matrix(W: WebNetwork, I: Sequence[int], J: Sequence[int]) -> list[list[int]]:
    """Single-path counts from each source in ``I`` to each sink in ``J``."""
    order = _topo(W)
    rows = []
    for i in sorted(I):
        count = [0] * W.n_vertices
        count[W.sources[i - 1]] = 1
        for v in order:
            if count[v]:
                for t in W.out_edges[v]:
                    count[t] += count[v]
        rows.append([count[W.sinks[j - 1]] for j in sorted(J)])
    return rows


def _topo(W: WebNetwork) -> list[int]:
    indeg = [0] * W.n_vertices
    for outs in W.out_edges:
        for t in outs:
            indeg[t] += 1
    ready = [i for i, d in enumerate(indeg) if d == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for t in W.out_edges[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
    return order


def lgv_count(W: WebNetwork, I: Sequence[int], J: Sequence[int]) -> int:
    """Determinant of the single-path count matrix (signed count of disjoint families)."""
    from .seedtrack import determinant
    return determinant(path_count_matrix(W, I, J))


def _height_at(W: WebNetwork, path, x: Fraction) -> Fraction:
    pts = [W.coords[v] for v in path]
    if x <= pts[0][0]:
        return Fraction(pts[0][1])
    if x >= pts[-1][0]:
        return Fraction(pts[-1][1])
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 < x < x1:
            return y0 + (y1 - y0) * (x - x0) / Fraction(x1 - x0)
    raise AssertionError("path is not monotone in x")


def dominated_faces(W: WebNetwork, path, side: str = BELOW) -> list[int]:
    """Faces on the right of ``path`` travelling left to right, i.e. below it.

    The path is read as a graph over x, extended flat past its ends, and
    probed half a unit right of each centroid to step off vertical legs.
    """
    out = []
    for f, (cx, cy) in enumerate(W.centroids):
        h = _height_at(W, path, Fraction(2 * cx + 1, 2))
        if (cy < h) if side == BELOW else (cy > h):
            out.append(f)
    return out


def _face_variables(W: WebNetwork) -> list[int]:
    index = qn_index(W.n)
    return [index[v] for v in W.faces]


def measurement(W: WebNetwork, I: Sequence[int], J: Sequence[int], side: str = BELOW) -> Polynomial:
    var = _face_variables(W)
    total: dict = {}
    weights: dict = {}
    for fam in path_families(W, I, J):
        exps: dict[int, int] = {}
        for path in fam.paths:
            if path not in weights:
                weights[path] = dominated_faces(W, path, side)
            for f in weights[path]:
                exps[var[f]] = exps.get(var[f], 0) + 1
        key = tuple(sorted(exps.items()))
        total[key] = total.get(key, 0) + 1
    return Polynomial.from_terms((c, dict(k)) for k, c in total.items())


def boundary_measurement(W: WebNetwork, f, side: str = BELOW) -> Polynomial:
    """M_f for a mutable face ``(a, b, c)`` or a frozen face name like ``"R2"``."""
    J = face_j_set(W.n, f)
    return measurement(W, range(1, len(J) + 1), J, side)


def face_j_set(n: int, f) -> tuple[int, ...]:
    if isinstance(f, str):
        frozen = dict(frozen_faces(n))
        if f not in frozen:
            raise KeyError(f"no frozen face {f!r}")
        return frozen[f]
    f = tuple(f)
    if f not in qn_index(n):
        raise OutOfSimplex(f"{qn_name(f)} is not a vertex of Q_{n}")
    return j_set(n, f)


def factor_phi(M: Polynomial) -> tuple[Polynomial, Polynomial]:
    if not M:
        raise ValueError("cannot factor the zero polynomial")
    N = Polynomial.monomial(M.monomial_content())
    phi = exact_div(M, N)
    if phi.constant_term != 1:
        raise NotUnital(f"content-free part has constant term {phi.constant_term}")
    return N, phi


# ---------------------------------------------------------------------------
# plane partitions


def plane_partitions(a: int, b: int, c: int) -> list[tuple[tuple[int, ...], ...]]:
    """Height functions on an ``a x b`` grid with values in ``0..c``, weakly decreasing."""
    if min(a, b, c) < 0:
        raise ValueError("box dimensions must be non-negative")
    out = []
    grid = [[0] * b for _ in range(a)]

    def fill(k):
        if k == a * b:
            out.append(tuple(tuple(r) for r in grid))
            return
        i, j = divmod(k, b)
        top = c
        if i:
            top = min(top, grid[i - 1][j])
        if j:
            top = min(top, grid[i][j - 1])
        for h in range(top + 1):
            grid[i][j] = h
            fill(k + 1)

    fill(0)
    return out


def macmahon(a: int, b: int, c: int) -> int:
    num = den = 1
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    return num // den


# ---------------------------------------------------------------------------
# monomial identity on the web


@dataclass
class WebIdentityReport:
    n: int
    side: str
    monomial_ok: dict
    dt_ok: dict
    phi_ok: dict

    @property
    def ok(self) -> bool:
        return all(self.monomial_ok.values()) and all(self.dt_ok.values()) and all(self.phi_ok.values())

    def lines(self) -> list[str]:
        out = []
        for f in self.monomial_ok:
            flags = (self.monomial_ok[f], self.phi_ok.get(f), self.dt_ok.get(f))
            status = "pass" if all(x is not False for x in flags) else "FAIL"
            out.append(f"{f}: {status} (N-product {_yn(flags[0])}, Phi=F {_yn(flags[1])}, DT {_yn(flags[2])})")
        return out


def _yn(x) -> str:
    return "-" if x is None else ("ok" if x else "bad")


def all_face_measurements(n: int, side: str = BELOW) -> dict:
    """M for every face of Q_n, keyed by quiver vertex name (mutable and frozen)."""
    W = build_web(n)
    q = qn_extended(n)
    out = {}
    for v in qn_vertices(n):
        out[q.names[qn_index(n)[v]]] = boundary_measurement(W, v, side)
    for name, _ in frozen_faces(n):
        out[name] = boundary_measurement(W, name, side)
    return out


def verify_web_identity(n: int, side: str = BELOW, F: Sequence[Polynomial] | None = None,
                         strict: bool = False) -> WebIdentityReport:
    """Check the monomial identity for every mutable face, then the DT cross-check.

    ``F`` defaults to the engine's DT F-polynomials along the known maximal
    green sequence.  Non-unital measurements count as failures rather than
    raising, so a wrong convention shows up in the report.
    """
    from .families import qn_maximal_green, qn_quiver
    from .seedtrack import dt_transform
    q = qn_extended(n)
    nm = q.n_mutable
    M = all_face_measurements(n, side)
    N, phi = {}, {}
    for name, m in M.items():
        N[name] = Laurent.monomial(m.monomial_content()) if m else None
        try:
            phi[name] = factor_phi(m)[1]
        except (NotUnital, ValueError):
            phi[name] = None
    if F is None:
        F = dt_transform(qn_quiver(n), qn_maximal_green(n)).F_dt
    mono_ok, dt_ok, phi_ok = {}, {}, {}
    for f in range(nm):
        fname = q.names[f]
        acc = Laurent.monomial({})
        bad = False
        for g in range(q.n):
            e = q.eps[f][g]
            if not e:
                continue
            if N[q.names[g]] is None:
                bad = True
                break
            acc = acc * N[q.names[g]] ** e
        mono_ok[fname] = not bad and acc == Laurent.monomial({f: -1})
        phi_ok[fname] = phi[fname] is not None and phi[fname] == F[f]
        # DT(X_f) from the web against X_f^{-1} * prod F_j^{eps_fj}
        if bad or any(phi[q.names[g]] is None for g in range(q.n) if q.eps[f][g]):
            dt_ok[fname] = False
            continue
        web_side = RationalExpr(1)
        for g in range(q.n):
            e = q.eps[f][g]
            if e:
                web_side = web_side * RationalExpr(M[q.names[g]]) ** e
        engine_side = RationalExpr(1, Polynomial.var(f))
        for j in range(nm):
            e = q.eps[f][j]
            if e:
                engine_side = engine_side * RationalExpr(F[j]) ** e
        dt_ok[fname] = web_side == engine_side
    report = WebIdentityReport(n, side, mono_ok, dt_ok, phi_ok)
    if strict and not report.ok:
        raise IdentityViolation("\n".join(report.lines()))
    return report


def phi_matches_lift(n: int, side: str = BELOW) -> dict:
    """Compare each Φ_f with the ideal function of the box poset over ``f``."""
    from .poset import ideal_function
    W = build_web(n)
    out = {}
    for v in qn_vertices(n):
        _, phi = factor_phi(boundary_measurement(W, v, side))
        out[v] = phi == ideal_function(lift3d_poset(n, *v))
    return out


def term_counts(n: int) -> dict:
    W = build_web(n)
    return {v: len(boundary_measurement(W, v).terms()) for v in qn_vertices(n)}


def evaluate_at_ones(p: Polynomial) -> int:
    return int(p.evaluate({v: 1 for v in p.variables()}))

