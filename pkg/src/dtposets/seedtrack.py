"""Principal-coefficient seeds and the DT F-polynomials read off a reddening sequence.

A seed keeps the top ``n`` rows of the framed exchange matrix::

    [ eps | C ]        (n x 2n)

Those rows are closed under mutation at mutable vertices, so the frozen
rows of the framed quiver never need to be stored.  ``C`` (the c-vectors,
one per row) is read off the right block; g-vectors come from ``(C^-1)^T``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import (ONE, Laurent, Polynomial, exact_div, product, substitute,
                   substitute_exchange, var)
from .quiver import (Matrix, Quiver, QuiverError, find_isomorphism, is_isomorphism,
                     mutate_matrix)


class SeedError(AssertionError):
    """An invariant of the mutation engine failed; this is always a bug."""


class SignCoherenceViolation(SeedError):
    pass


class NotReddening(ValueError):
    pass


class Color(Enum):
    GREEN = "green"
    RED = "red"


class Mode(Enum):
    REDDENING = "reddening"
    GREEN = "green"


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _framed_rows(q: Quiver) -> Matrix:
    n = q.n_mutable
    return tuple(tuple(q.eps[i][:n]) + tuple(int(i == j) for j in range(n)) for i in range(n))


def _row_sign(c: Sequence[int]) -> int:
    """+1 green, -1 red, 0 for a zero or mixed row."""
    pos = any(x > 0 for x in c)
    neg = any(x < 0 for x in c)
    if pos and not neg:
        return 1
    if neg and not pos:
        return -1
    return 0


@dataclass(frozen=True)
class PrincipalSeed:
    quiver: Quiver
    rows: Matrix
    F: tuple[Polynomial, ...]
    history: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def eps(self) -> Matrix:
        n = self.n
        return tuple(r[:n] for r in self.rows)

    @property
    def C(self) -> Matrix:
        n = self.n
        return tuple(r[n:] for r in self.rows)

    @property
    def current_quiver(self) -> Quiver:
        return Quiver(self.eps, self.n, self.quiver.names)

    def color(self, i: int) -> Color:
        return vertex_color(self, i)

    def is_all_red(self) -> bool:
        return all(_row_sign(c) < 0 for c in self.C)

    def to_structured(self) -> dict:
        names = dict(enumerate(self.quiver.names))
        return {
            "eps": [list(r) for r in self.eps],
            "C": [list(r) for r in self.C],
            "g": [list(r) for r in g_matrix(self)],
            "F": [f.to_text(names) for f in self.F],
            "history": [self.quiver.names[k] for k in self.history],
        }


def initial_seed(q: Quiver) -> PrincipalSeed:
    q = q.mutable_part()
    return PrincipalSeed(q, _framed_rows(q), tuple(ONE for _ in range(q.n)))


def mutate_seed(s: PrincipalSeed, k: int, check: bool = True) -> PrincipalSeed:
    n = s.n
    if not 0 <= k < n:
        raise QuiverError(f"vertex {k} is not mutable")
    row = s.rows[k]
    e, c = row[:n], row[n:]
    x_pos = Polynomial.monomial({j: _pos(c[j]) for j in range(n) if c[j] > 0})
    x_neg = Polynomial.monomial({j: _pos(-c[j]) for j in range(n) if c[j] < 0})
    if (x_pos == ONE) == (x_neg == ONE):
        raise SignCoherenceViolation(f"c-vector {c} of vertex {k} is not sign-coherent")
    f_pos = product(s.F[j] ** e[j] for j in range(n) if e[j] > 0)
    f_neg = product(s.F[j] ** -e[j] for j in range(n) if e[j] < 0)
    new_fk = exact_div(x_pos * f_pos + x_neg * f_neg, s.F[k])
    F = s.F[:k] + (new_fk,) + s.F[k + 1:]
    out = PrincipalSeed(s.quiver, mutate_matrix(s.rows, k), F, s.history + (k,))
    if check:
        check_invariants(out)
    return out


def mutate_sequence(s: PrincipalSeed, seq: Iterable[int], check: bool = True) -> PrincipalSeed:
    for k in seq:
        s = mutate_seed(s, k, check)
    return s


def vertex_color(s: PrincipalSeed, i: int) -> Color:
    sign = _row_sign(s.rows[i][s.n:])
    if sign == 0:
        raise SignCoherenceViolation(f"row {i} of C is not sign-coherent")
    return Color.GREEN if sign > 0 else Color.RED


# ---------------------------------------------------------------------------
# exact integer linear algebra


def determinant(m: Sequence[Sequence[int]]) -> int:
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for t in range(col, n):
                    a[r][t] -= f * a[col][t]
    return int(det)


def inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [r[n:] for r in a]


def g_matrix(s: PrincipalSeed) -> tuple[tuple[int, ...], ...]:
    """Rows are g-vectors: ``g = (C^-1)^T``."""
    inv = inverse(s.C)
    n = s.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = inv[j][i]
            if x.denominator != 1:
                raise SeedError("C-matrix is not unimodular")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


def check_invariants(s: PrincipalSeed) -> None:
    """Sign coherence, det C = +-1, g^T C = id, F unital with positive coefficients."""
    n = s.n
    C = s.C
    for i, c in enumerate(C):
        if _row_sign(c) == 0:
            raise SignCoherenceViolation(f"row {i} of C = {c}")
    if determinant(C) not in (1, -1):
        raise SeedError("det C is not +-1")
    g = g_matrix(s)
    for i in range(n):
        for j in range(n):
            if sum(g[k][i] * C[k][j] for k in range(n)) != int(i == j):
                raise SeedError("g^T C is not the identity")
    for i, f in enumerate(s.F):
        if f.constant_term != 1:
            raise SeedError(f"F[{i}] has constant term {f.constant_term}")
        if any(c <= 0 for c in f.coefficients()):
            raise SeedError(f"F[{i}] has a non-positive coefficient")


# ---------------------------------------------------------------------------
# search


@dataclass
class SearchConfig:
    max_depth: int = 12
    mode: Mode = Mode.REDDENING


def search_reddening(q: Quiver, max_depth: int = 12,
                     mode: Mode | str = Mode.REDDENING) -> tuple[int, ...] | None:
    """Shortest reddening (or maximal green) sequence, lexicographically first.

    Iterative deepening DFS over the ``[eps | C]`` rows only.  A state that
    failed with some remaining budget is skipped when met again with no more
    budget; the key includes the previous vertex because immediate repeats
    are forbidden.  ``None`` means nothing was found up to ``max_depth``.
    """
    mode = Mode(mode)
    q = q.mutable_part()
    n = q.n
    if n == 0:
        return ()
    start = _framed_rows(q)
    failed: dict[tuple, int] = {}
    green_only = mode is Mode.GREEN

    def dfs(rows, budget, last):
        signs = [_row_sign(r[n:]) for r in rows]
        if all(x < 0 for x in signs):
            return []
        if budget == 0:
            return None
        key = (rows, last)
        if failed.get(key, -1) >= budget:
            return None
        for k in range(n):
            if k == last or (green_only and signs[k] <= 0):
                continue
            found = dfs(mutate_matrix(rows, k), budget - 1, k)
            if found is not None:
                return [k] + found
        failed[key] = budget
        return None

    for depth in range(max_depth + 1):
        found = dfs(start, depth, -1)
        if found is not None:
            return tuple(found)
    return None


def is_reddening(q: Quiver, seq: Sequence[int]) -> bool:
    rows = _framed_rows(q.mutable_part())
    for k in seq:
        rows = mutate_matrix(rows, k)
    n = len(rows)
    return all(_row_sign(r[n:]) < 0 for r in rows)


def is_maximal_green(q: Quiver, seq: Sequence[int]) -> bool:
    rows = _framed_rows(q.mutable_part())
    n = len(rows)
    for k in seq:
        if _row_sign(rows[k][n:]) <= 0:
            return False
        rows = mutate_matrix(rows, k)
    return all(_row_sign(r[n:]) < 0 for r in rows)


# ---------------------------------------------------------------------------
# DT


@dataclass(frozen=True)
class DtResult:
    quiver: Quiver
    sequence: tuple[int, ...]
    sigma: tuple[int, ...]
    F_dt: tuple[Polynomial, ...]
    endpoint: PrincipalSeed = field(repr=False, compare=False, default=None)

    def to_text(self) -> list[str]:
        names = dict(enumerate(self.quiver.names))
        return [f.to_text(names) for f in self.F_dt]


def dt_transform(q: Quiver, seq: Sequence[int], check: bool = True) -> DtResult:
    q = q.mutable_part()
    n = q.n
    s = mutate_sequence(initial_seed(q), seq, check)
    if not s.is_all_red():
        green = [q.names[i] for i in range(n) if _row_sign(s.C[i]) > 0]
        raise NotReddening(f"vertices {green} are still green")
    sigma = [-1] * n
    for j, c in enumerate(s.C):
        hits = [t for t, x in enumerate(c) if x]
        if len(hits) != 1 or c[hits[0]] != -1:
            raise SeedError(f"endpoint c-vector {c} is not a negative basis vector")
        sigma[j] = hits[0]
    sigma = tuple(sigma)
    end = Quiver(s.eps, n, q.names)
    if not is_isomorphism(end, q, sigma) or find_isomorphism(end, q) is None:
        raise SeedError("endpoint quiver is not isomorphic to the start via sigma")
    F = [None] * n
    for j in range(n):
        F[sigma[j]] = s.F[j]
    return DtResult(q, tuple(seq), sigma, tuple(F), s)


def dt_by_search(q: Quiver, max_depth: int = 12, mode: Mode | str = Mode.REDDENING) -> DtResult | None:
    seq = search_reddening(q, max_depth, mode)
    return None if seq is None else dt_transform(q, seq)


# ---------------------------------------------------------------------------
# transfer principles


def change_initial_seed(F: Sequence[Polynomial], q: Quiver, k: int) -> list[Polynomial]:
    """DT F-polynomials of ``mu_k(q)`` from those of ``q``.

    Variables keep their positions; the new initial seed is ``mu_k(q)``.
    """
    q = q.mutable_part()
    n = q.n
    if not 0 <= k < n:
        raise QuiverError(f"vertex {k} is not mutable")
    e = q.eps[k]
    mu_fk = exact_div(product(F[j] ** e[j] for j in range(n) if e[j] > 0)
                      + var(k) * product(F[j] ** -e[j] for j in range(n) if e[j] < 0), F[k])
    column = [q.eps[i][k] for i in range(n)]
    out = []
    for i in range(n):
        if i == k:
            out.append(substitute_exchange(mu_fk, k, column, extra=1))
        else:
            out.append(substitute_exchange(F[i], k, column))
    return out


def restrict_to_subquiver(F: Sequence[Polynomial], keep: Iterable[int]) -> list[Polynomial]:
    """Set ``X_j = 0`` off ``keep`` and renumber variables to subquiver positions."""
    keep = sorted(set(keep))
    gone = [j for j in range(len(F)) if j not in set(keep)]
    renumber = {v: i for i, v in enumerate(keep)}
    return [F[i].set_zero(gone).rename(renumber) for i in keep]


def compose_triangular(F1: Sequence[Polynomial], F2: Sequence[Polynomial],
                       delta: Sequence[Sequence[int]]) -> list[Polynomial]:
    """DT F-polynomials of a triangular extension from those of its pieces.

    ``F2`` uses local variables ``0..n2-1``; in the result the second block
    is shifted to ``n1..n1+n2-1`` as in :func:`triangular_extension`.
    """
    n1, n2 = len(F1), len(F2)
    images = {}
    for j in range(n2):
        images[j] = var(n1 + j) * product(F1[k] ** delta[k][j] for k in range(n1) if delta[k][j])
    out = list(F1)
    for f in F2:
        out.append(substitute(f, images).to_polynomial())
    return out


# ---------------------------------------------------------------------------
# separation formula


def laurent_cluster(q: Quiver, seq: Sequence[int]) -> list[Laurent]:
    """Cluster variables after ``seq`` as Laurent polynomials in ``A_0..A_{n-1}``."""
    q = q.mutable_part()
    eps = q.eps
    cluster = [Laurent(var(i)) for i in range(q.n)]
    for k in seq:
        row = eps[k]
        num = Laurent(ONE)
        den = Laurent(ONE)
        for j in range(q.n):
            if row[j] > 0:
                num = num * cluster[j] ** row[j]
            elif row[j] < 0:
                den = den * cluster[j] ** -row[j]
        cluster[k] = (num + den).exact_div(cluster[k])
        eps = mutate_matrix(eps, k)
    return cluster


def p_map(f: Polynomial, eps: Matrix) -> Laurent:
    """Substitute ``X_j = prod_k A_k ** eps[j][k]``."""
    terms = []
    for c, exps in f.terms():
        vec: dict[int, int] = {}
        for j, e in exps.items():
            for t, x in enumerate(eps[j]):
                if x:
                    vec[t] = vec.get(t, 0) + e * x
        terms.append((c, vec))
    base: dict[int, int] = {}
    for _, vec in terms:
        for t, x in vec.items():
            base[t] = min(base.get(t, 0), x)
    poly = Polynomial.from_terms((c, {t: vec.get(t, 0) - base.get(t, 0)
                                      for t in set(vec) | set(base)}) for c, vec in terms)
    return Laurent(poly, base)


def separation_check(q: Quiver, seq: Sequence[int]) -> bool:
    """Compare mutated cluster variables with ``A**g_i * p(F_i)``."""
    q = q.mutable_part()
    cluster = laurent_cluster(q, seq)
    s = mutate_sequence(initial_seed(q), seq)
    g = g_matrix(s)
    for i in range(q.n):
        mono = Laurent.monomial({j: x for j, x in enumerate(g[i]) if x})
        if mono * p_map(s.F[i], q.eps) != cluster[i]:
            return False
    return True
