"""Quivers as skew-symmetric exchange matrices.

Vertices are positional, mutable ones first.  ``eps[i][j]`` counts arrows
``i -> j`` minus arrows ``j -> i``.  Mutation at ``k`` flips every entry in
row/column ``k`` and, for the others, adds ``(|e_ik| e_kj + e_ik |e_kj|) / 2``,
which is the usual ``[e_ik]+[e_kj]+ - [-e_ik]+[-e_kj]+``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Matrix = tuple[tuple[int, ...], ...]


class QuiverError(ValueError):
    pass


class FrozenMutation(QuiverError):
    pass


class EmptySubset(QuiverError):
    pass


class NegativeDelta(QuiverError):
    pass


def mutate_matrix(eps: Matrix, k: int) -> Matrix:
    """Matrix mutation at ``k``; rows not adjacent to ``k`` are shared."""
    rk = eps[k]
    out = []
    for i, row in enumerate(eps):
        a = row[k]
        if i == k:
            out.append(tuple(-x for x in row))
        elif a == 0:
            out.append(row)
        else:
            b = abs(a)
            new = [x + (b * y + a * abs(y)) // 2 for x, y in zip(row, rk)]
            new[k] = -a
            out.append(tuple(new))
    return tuple(out)


def is_skew_symmetric(eps: Sequence[Sequence[int]]) -> bool:
    n = len(eps)
    return all(len(r) == n for r in eps) and all(
        eps[i][j] == -eps[j][i] for i in range(n) for j in range(i, n))


@dataclass(frozen=True)
class Quiver:
    """Exchange matrix plus mutable/frozen split and optional vertex names.

    ``origin`` records, for a subquiver, which vertex of the ambient quiver
    each position came from.
    """

    eps: Matrix
    n_mutable: int
    names: tuple[str, ...] = ()
    origin: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        eps = tuple(tuple(int(x) for x in row) for row in self.eps)
        object.__setattr__(self, "eps", eps)
        if not is_skew_symmetric(eps):
            raise QuiverError("exchange matrix is not skew-symmetric")
        if not 0 <= self.n_mutable <= len(eps):
            raise QuiverError("n_mutable out of range")
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(len(eps))))
        if len(self.names) != len(eps):
            raise QuiverError("one name per vertex required")
        if len(set(self.names)) != len(self.names):
            raise QuiverError("vertex names must be distinct")

    # construction -------------------------------------------------------
    @classmethod
    def from_arrows(cls, mutable: Sequence, arrows: Iterable[Sequence],
                    frozen: Sequence = ()) -> "Quiver":
        """Build from vertex names and ``(source, target[, multiplicity])``."""
        names = [str(v) for v in list(mutable) + list(frozen)]
        index = {v: i for i, v in enumerate(names)}
        n = len(names)
        eps = [[0] * n for _ in range(n)]
        for arrow in arrows:
            s, t = index[str(arrow[0])], index[str(arrow[1])]
            mult = int(arrow[2]) if len(arrow) > 2 else 1
            if s == t:
                raise QuiverError(f"loop at {names[s]}")
            eps[s][t] += mult
            eps[t][s] -= mult
        return cls(tuple(map(tuple, eps)), len(mutable), tuple(names))

    @classmethod
    def from_matrix(cls, eps, n_mutable: int | None = None, names=()) -> "Quiver":
        eps = tuple(tuple(r) for r in eps)
        return cls(eps, len(eps) if n_mutable is None else n_mutable, tuple(names))

    # basic queries ------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.eps)

    @property
    def n_frozen(self) -> int:
        return len(self.eps) - self.n_mutable

    def index(self, name) -> int:
        try:
            return self.names.index(str(name))
        except ValueError:
            raise QuiverError(f"no vertex named {name!r}") from None

    def arrows(self) -> list[tuple[int, int, int]]:
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                e = self.eps[i][j]
                if e > 0:
                    out.append((i, j, e))
                elif e < 0:
                    out.append((j, i, -e))
        return out

    def is_acyclic(self) -> bool:
        return topological_order(self) is not None

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(self.n):
                if self.eps[i][j] and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n

    def mutable_part(self) -> "Quiver":
        if self.n_frozen == 0:
            return self
        return full_subquiver(self, range(self.n_mutable))

    def mutate(self, k: int) -> "Quiver":
        return mutate(self, k)

    def mutate_sequence(self, seq: Iterable[int]) -> "Quiver":
        q = self
        for k in seq:
            q = mutate(q, k)
        return q

    # I/O ----------------------------------------------------------------
    def to_structured(self) -> dict:
        return {
            "mutable": list(self.names[:self.n_mutable]),
            "frozen": list(self.names[self.n_mutable:]),
            "arrows": [[self.names[s], self.names[t], m] for s, t, m in self.arrows()],
        }

    @classmethod
    def from_structured(cls, data: dict) -> "Quiver":
        return cls.from_arrows(data.get("mutable", []), data.get("arrows", []),
                               data.get("frozen", []))

    def to_dot(self) -> str:
        lines = ["digraph Q {"]
        for i, name in enumerate(self.names):
            shape = "" if i < self.n_mutable else ", shape=box"
            lines.append(f'  v{i} [label="{name}"{shape}];')
        for s, t, m in self.arrows():
            attr = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  v{s} -> v{t}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def mutate(q: Quiver, k: int) -> Quiver:
    if not 0 <= k < q.n_mutable:
        raise FrozenMutation(f"vertex {k} is not mutable")
    eps = mutate_matrix(q.eps, k)
    return Quiver(eps, q.n_mutable, q.names, q.origin)


def with_principal_coefficients(q: Quiver) -> Quiver:
    """Add a frozen copy ``i'`` of each mutable ``i`` with one arrow ``i -> i'``."""
    n, m = q.n_mutable, q.n
    size = m + n
    eps = [list(row) + [0] * n for row in q.eps] + [[0] * size for _ in range(n)]
    for i in range(n):
        eps[i][m + i] = 1
        eps[m + i][i] = -1
    names = q.names + tuple(name + "'" for name in q.names[:n])
    return Quiver(tuple(map(tuple, eps)), n, names)


def full_subquiver(q: Quiver, keep: Iterable[int]) -> Quiver:
    keep = sorted(set(keep))
    if not keep:
        raise EmptySubset("a full subquiver needs at least one vertex")
    if keep[0] < 0 or keep[-1] >= q.n:
        raise QuiverError("vertex out of range")
    eps = tuple(tuple(q.eps[i][j] for j in keep) for i in keep)
    n_mut = sum(1 for i in keep if i < q.n_mutable)
    base = q.origin or tuple(range(q.n))
    return Quiver(eps, n_mut, tuple(q.names[i] for i in keep), tuple(base[i] for i in keep))


def triangular_extension(q1: Quiver, q2: Quiver, delta: Sequence[Sequence[int]]) -> Quiver:
    """Glue ``q1`` and ``q2`` with ``delta[i][j]`` arrows from ``i`` in q1 to ``j`` in q2."""
    if q1.n_frozen or q2.n_frozen:
        raise QuiverError("triangular extension is defined on mutable quivers")
    n1, n2 = q1.n, q2.n
    if len(delta) != n1 or any(len(r) != n2 for r in delta):
        raise QuiverError("delta has the wrong shape")
    if any(x < 0 for r in delta for x in r):
        raise NegativeDelta("all entries of delta must be non-negative")
    eps = [list(r) + list(d) for r, d in zip(q1.eps, delta)]
    for j in range(n2):
        eps.append([-delta[i][j] for i in range(n1)] + list(q2.eps[j]))
    names = q1.names + q2.names
    if len(set(names)) != len(names):
        names = tuple(f"a{x}" for x in q1.names) + tuple(f"b{x}" for x in q2.names)
    return Quiver(tuple(map(tuple, eps)), n1 + n2, names)


def isomorphisms(q: Quiver, q2: Quiver) -> Iterator[tuple[int, ...]]:
    """All ``s`` with ``q2.eps[s[i]][s[j]] == q.eps[i][j]``, lexicographically.

    Mutable vertices map to mutable ones.  Candidates are pruned by the
    sorted row multiset, then extended one vertex at a time.
    """
    n = q.n
    if n != q2.n or q.n_mutable != q2.n_mutable:
        return

    def sig(m, i):
        return (i < m.n_mutable, tuple(sorted(m.eps[i])))

    cand = [[j for j in range(n) if sig(q2, j) == sig(q, i)] for i in range(n)]
    if any(not c for c in cand):
        return
    perm = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            yield tuple(perm)
            return
        row = q.eps[i]
        for j in cand[i]:
            if used[j]:
                continue
            row2 = q2.eps[j]
            if all(row2[perm[t]] == row[t] for t in range(i)):
                perm[i] = j
                used[j] = True
                yield from extend(i + 1)
                used[j] = False
        perm[i] = -1

    yield from extend(0)


def find_isomorphism(q: Quiver, q2: Quiver) -> tuple[int, ...] | None:
    return next(isomorphisms(q, q2), None)


def is_isomorphism(q: Quiver, q2: Quiver, perm: Sequence[int]) -> bool:
    n = q.n
    return (n == q2.n and sorted(perm) == list(range(n)) and all(
        q2.eps[perm[i]][perm[j]] == q.eps[i][j] for i in range(n) for j in range(n)))


def topological_order(q: Quiver) -> list[int] | None:
    """Sources first; ``None`` when the quiver has an oriented cycle."""
    n = q.n
    indeg = [sum(1 for j in range(n) if q.eps[j][i] > 0) for i in range(n)]
    ready = [i for i in range(n) if indeg[i] == 0]
    order = []
    while ready:
        i = min(ready)
        ready.remove(i)
        order.append(i)
        for j in range(n):
            if q.eps[i][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
    return order if len(order) == n else None


def reversed_quiver(q: Quiver) -> Quiver:
    return Quiver(tuple(tuple(-x for x in r) for r in q.eps), q.n_mutable, q.names)
