"""Labeled finite posets and their ideal-generating functions.

A poset is given by cover pairs ``(upper, lower)``; Hasse diagrams point
down.  Labels are a variable id (``int``), :data:`ZERO_LABEL`, or a
:class:`~dtposets.poly.RationalExpr`.

The ideal function is computed by splitting off connected components and
branching on a minimal element ``x``::

    F(S) = F(S minus the up-set of x) + L_x * F(S minus x)

with memoisation on the remaining element set.  Plain enumeration
(:func:`enumerate_ideals`) is kept as the independent oracle.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .poly import ONE, Polynomial, RationalExpr, var


class PosetError(ValueError):
    pass


class NotPointed(PosetError):
    pass


class InvalidPair(PosetError):
    pass


class PieceNotPointed(PosetError):
    pass


class IdealLimitExceeded(RuntimeError):
    pass


class Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO_LABEL"


ZERO_LABEL = Zero()
Label = "int | Zero | RationalExpr"

DEFAULT_IDEAL_LIMIT = 10 ** 6


def label_text(label, names: Mapping[int, str] | None = None) -> str:
    if label is ZERO_LABEL:
        return "0"
    if isinstance(label, int):
        return f"X{names[label] if names else label}"
    return label.to_text(names)


def parse_label(text: str, names: Mapping[str, int] | None = None):
    text = text.strip()
    if text == "0":
        return ZERO_LABEL
    m = re.fullmatch(r"X(\d+|\([^)]*\)|[A-Za-z0-9_']+)", text)
    if m:
        key = m.group(1)
        if names is not None:
            return names[key]
        if key.isdigit():
            return int(key)
    return RationalExpr.parse(text, names)


def _as_rational(label) -> RationalExpr:
    if label is ZERO_LABEL:
        return RationalExpr(0)
    if isinstance(label, int):
        return RationalExpr(var(label))
    return label


class LabeledPoset:
    """Immutable labeled poset; relations are reduced to covers on construction."""

    __slots__ = ("elements", "covers", "labels", "_down", "_up", "_lower", "_upper", "_topo")

    def __init__(self, elements: Iterable[int], relations: Iterable[tuple[int, int]],
                 labels: Mapping[int, object]):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise PosetError("duplicate elements")
        relations = [tuple(r) for r in relations]
        if len(set(relations)) != len(relations):
            raise PosetError("duplicate covers")
        eset = set(elements)
        for u, l in relations:
            if u not in eset or l not in eset:
                raise PosetError(f"relation {(u, l)} mentions an unknown element")
            if u == l:
                raise PosetError(f"loop at {u}")
        missing = eset - set(labels)
        if missing:
            raise PosetError(f"unlabeled elements {sorted(missing)}")
        below = {e: set() for e in elements}
        for u, l in relations:
            below[u].add(l)
        topo = _toposort(elements, below)
        if topo is None:
            raise PosetError("relations contain a cycle")
        down: dict[int, frozenset] = {}
        for e in topo:
            acc = set()
            for l in below[e]:
                acc.add(l)
                acc |= down[l]
            down[e] = frozenset(acc)
        position = {e: i for i, e in enumerate(topo)}
        covers = []
        lower = {e: [] for e in elements}
        upper = {e: [] for e in elements}
        for e in elements:
            for l in sorted(down[e], key=position.get):
                if not any(l in down[m] for m in down[e] if m != l):
                    covers.append((e, l))
                    lower[e].append(l)
                    upper[l].append(e)
        up = {e: set() for e in elements}
        for e in elements:
            for l in down[e]:
                up[l].add(e)
        self.elements = elements
        self.covers = tuple(covers)
        self.labels = {e: labels[e] for e in elements}
        self._down = down
        self._up = {e: frozenset(s) for e, s in up.items()}
        self._lower = {e: tuple(v) for e, v in lower.items()}
        self._upper = {e: tuple(v) for e, v in upper.items()}
        self._topo = tuple(topo)

    # queries ------------------------------------------------------------
    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"LabeledPoset({len(self.elements)} elements, {len(self.covers)} covers)"

    def __eq__(self, other):
        if not isinstance(other, LabeledPoset):
            return NotImplemented
        return (set(self.elements) == set(other.elements)
                and set(self.covers) == set(other.covers)
                and all(_label_eq(self.labels[e], other.labels[e]) for e in self.elements))

    __hash__ = None

    def less(self, a: int, b: int) -> bool:
        """``a < b`` in the poset."""
        return a in self._down[b]

    def down_set(self, e: int) -> frozenset:
        return self._down[e]

    def up_set(self, e: int) -> frozenset:
        return self._up[e]

    def lower_covers(self, e: int) -> tuple:
        return self._lower[e]

    def upper_covers(self, e: int) -> tuple:
        return self._upper[e]

    def topological_order(self) -> tuple:
        return self._topo

    def minimal_elements(self) -> list[int]:
        return [e for e in self._topo if not self._lower[e]]

    def maximal_elements(self) -> list[int]:
        return [e for e in self._topo if not self._upper[e]]

    def is_pointed(self) -> bool:
        return len(self.minimal_elements()) == 1

    def is_simple(self) -> bool:
        return all(isinstance(lab, int) for lab in self.labels.values())

    def is_polynomial(self) -> bool:
        return all(isinstance(lab, int) or lab is ZERO_LABEL for lab in self.labels.values())

    def label_multiset(self) -> dict:
        out: dict = {}
        for lab in self.labels.values():
            if isinstance(lab, int):
                out[lab] = out.get(lab, 0) + 1
        return out

    def induced(self, keep: Iterable[int]) -> "LabeledPoset":
        keep = set(keep)
        elems = [e for e in self.elements if e in keep]
        rel = [(u, l) for u in elems for l in self._down[u] if l in keep]
        return LabeledPoset(elems, rel, {e: self.labels[e] for e in elems})

    # I/O ----------------------------------------------------------------
    def to_structured(self, names: Mapping[int, str] | None = None) -> dict:
        return {
            "elements": [{"id": e, "label": label_text(self.labels[e], names)} for e in self.elements],
            "covers": [list(c) for c in self.covers],
        }

    @classmethod
    def from_structured(cls, data: dict, names: Mapping[str, int] | None = None) -> "LabeledPoset":
        elems = [int(x["id"]) for x in data["elements"]]
        labels = {int(x["id"]): parse_label(str(x["label"]), names) for x in data["elements"]}
        return cls(elems, [tuple(int(v) for v in c) for c in data.get("covers", [])], labels)

    def to_dot(self, names: Mapping[int, str] | None = None) -> str:
        return to_dot(self, names)


def _label_eq(a, b) -> bool:
    if isinstance(a, RationalExpr) or isinstance(b, RationalExpr):
        return _as_rational(a) == _as_rational(b)
    return a is b or a == b


def _toposort(elements, below) -> list | None:
    """Lower elements first; ties broken by the given element order."""
    pending = {e: len(below[e]) for e in elements}
    above: dict = {e: [] for e in elements}
    for e in elements:
        for l in below[e]:
            above[l].append(e)
    position = {e: i for i, e in enumerate(elements)}
    ready = sorted((e for e in elements if pending[e] == 0), key=position.get)
    order = []
    while ready:
        e = ready.pop(0)
        order.append(e)
        fresh = []
        for u in above[e]:
            pending[u] -= 1
            if pending[u] == 0:
                fresh.append(u)
        ready = sorted(ready + fresh, key=position.get)
    return order if len(order) == len(elements) else None


# ---------------------------------------------------------------------------
# ideals


def enumerate_ideals(p: LabeledPoset, limit: int = DEFAULT_IDEAL_LIMIT) -> list[frozenset]:
    """All order ideals, by include/exclude DFS along the topological order."""
    topo = p.topological_order()
    lower = {e: p.lower_covers(e) for e in topo}
    out: list[frozenset] = []
    chosen: set = set()

    def walk(i):
        if i == len(topo):
            if len(out) >= limit:
                raise IdealLimitExceeded(f"more than {limit} ideals")
            out.append(frozenset(chosen))
            return
        e = topo[i]
        walk(i + 1)
        if all(l in chosen for l in lower[e]):
            chosen.add(e)
            walk(i + 1)
            chosen.discard(e)

    walk(0)
    return out


def _components(p: LabeledPoset, s: frozenset) -> list[frozenset]:
    todo = set(s)
    comps = []
    while todo:
        start = todo.pop()
        comp = {start}
        stack = [start]
        while stack:
            e = stack.pop()
            for f in itertools.chain(p.lower_covers(e), p.upper_covers(e)):
                if f in todo:
                    todo.discard(f)
                    comp.add(f)
                    stack.append(f)
        comps.append(frozenset(comp))
    return comps


def _ideal_sum(p: LabeledPoset, weight: Mapping[int, object], one):
    """Sum over ideals of the product of weights, by decomposition."""
    order = {e: i for i, e in enumerate(p.topological_order())}
    memo: dict[frozenset, object] = {}

    def total(s: frozenset):
        if not s:
            return one
        hit = memo.get(s)
        if hit is not None:
            return hit
        comps = _components(p, s)
        if len(comps) > 1:
            value = one
            for c in comps:
                value = value * total(c)
        else:
            x = min((e for e in s if not any(l in s for l in p.lower_covers(e))), key=order.get)
            w = weight[x]
            without = total(s - p.up_set(x) - {x})
            value = without if _is_zero(w) else without + w * total(s - {x})
        memo[s] = value
        return value

    return total(frozenset(p.elements))


def _is_zero(w) -> bool:
    if isinstance(w, RationalExpr):
        return w.is_zero()
    return not w


def count_ideals(p: LabeledPoset) -> int:
    return _ideal_sum(p, {e: 1 for e in p.elements}, 1)


def ideal_function(p: LabeledPoset) -> Polynomial:
    """Sum over ideals of the product of labels (labels must be variables or 0)."""
    weight = {}
    for e, lab in p.labels.items():
        if lab is ZERO_LABEL:
            weight[e] = Polynomial.constant(0)
        elif isinstance(lab, int):
            weight[e] = var(lab)
        else:
            raise PosetError("rational labels: use ideal_function_eval or ideal_function_rational")
    return _ideal_sum(p, weight, ONE)


def ideal_function_rational(p: LabeledPoset) -> RationalExpr:
    weight = {e: _as_rational(lab) for e, lab in p.labels.items()}
    return _ideal_sum(p, weight, RationalExpr(1))


def ideal_function_brute(p: LabeledPoset, limit: int = DEFAULT_IDEAL_LIMIT) -> Polynomial:
    """Oracle: literally add up one monomial per enumerated ideal."""
    if not p.is_polynomial():
        raise PosetError("rational labels")
    terms = []
    for ideal in enumerate_ideals(p, limit):
        if any(p.labels[e] is ZERO_LABEL for e in ideal):
            continue
        exps: dict[int, int] = {}
        for e in ideal:
            exps[p.labels[e]] = exps.get(p.labels[e], 0) + 1
        terms.append((1, exps))
    return Polynomial.from_terms(terms)


def ideal_function_eval(p: LabeledPoset, point: Mapping[int, Fraction | int]) -> Fraction:
    """Exact value at ``point``; every label is evaluated before summing."""
    weight = {}
    for e, lab in p.labels.items():
        if lab is ZERO_LABEL:
            weight[e] = Fraction(0)
        elif isinstance(lab, int):
            weight[e] = Fraction(point[lab])
        else:
            weight[e] = lab.evaluate(point)
    return _ideal_sum(p, weight, Fraction(1))


# ---------------------------------------------------------------------------
# lemma transformations


def pointed_factor(p: LabeledPoset, check: bool = True):
    """``(L_min, P - min)`` with ``F(P) = 1 + L_min * F(P - min)``."""
    mins = p.minimal_elements()
    if len(mins) != 1:
        raise NotPointed(f"{len(mins)} minimal elements")
    m = mins[0]
    rest = p.induced(e for e in p.elements if e != m)
    if check and p.is_polynomial():
        lab = Polynomial.constant(0) if p.labels[m] is ZERO_LABEL else var(p.labels[m])
        if ideal_function(p) != 1 + lab * ideal_function(rest):
            raise AssertionError("pointed factorisation failed")
    return p.labels[m], rest


def insert_element(p: LabeledPoset, i: int, j: int, label) -> LabeledPoset:
    """Insert ``k`` with ``j < k < i`` and rescale the labels of ``j`` and ``i``.

    The label of ``j`` is divided by ``1 + L0`` and the label of ``i`` is
    multiplied by ``1 + 1/L0``, which leaves the ideal function unchanged.
    """
    if not p.less(j, i):
        raise InvalidPair(f"{j} is not below {i}")
    l0 = _as_rational(label)
    if l0.is_zero() or (l0 + 1).is_zero():
        raise PosetError("the inserted label and one plus it must be invertible")
    k = max(p.elements, default=-1) + 1
    labels = dict(p.labels)
    labels[j] = _as_rational(p.labels[j]) / (l0 + 1)
    labels[i] = _as_rational(p.labels[i]) * (l0.inverse() + 1)
    labels[k] = label if isinstance(label, int) else l0
    rel = list(p.covers) + [(k, j), (i, k)]
    return LabeledPoset(p.elements + (k,), rel, labels)


def truncate_zeros(p: LabeledPoset, check: bool = False) -> LabeledPoset:
    """Delete the up-set generated by zero-labeled elements."""
    gone = set()
    for e, lab in p.labels.items():
        if lab is ZERO_LABEL:
            gone.add(e)
            gone |= p.up_set(e)
    out = p.induced(e for e in p.elements if e not in gone)
    if check and p.is_polynomial() and ideal_function(out) != ideal_function(p):
        raise AssertionError("zero truncation changed the ideal function")
    return out


def relabel(p: LabeledPoset, mapping: Mapping[int, object]) -> LabeledPoset:
    labels = {e: (mapping.get(lab, lab) if isinstance(lab, int) else lab)
              for e, lab in p.labels.items()}
    return LabeledPoset(p.elements, p.covers, labels)


def delete_antiideal_for_subquiver(p: LabeledPoset, gone: Iterable[int],
                                   check: bool = False) -> LabeledPoset:
    return truncate_zeros(relabel(p, {v: ZERO_LABEL for v in gone}), check)


def attach(p: LabeledPoset, at_label: int,
           pieces: Sequence[tuple[LabeledPoset, int]]) -> LabeledPoset:
    """Put ``mult`` copies of each piece above every element labeled ``X_at_label``."""
    for piece, mult in pieces:
        if mult < 0:
            raise PosetError("negative multiplicity")
        if mult and not piece.is_pointed():
            raise PieceNotPointed("attached pieces must have a unique minimum")
    elements = list(p.elements)
    relations = list(p.covers)
    labels = dict(p.labels)
    fresh = max(p.elements, default=-1) + 1
    for target in p.elements:
        if not isinstance(p.labels[target], int) or p.labels[target] != at_label:
            continue
        for piece, mult in pieces:
            for _ in range(mult):
                ids = {}
                for e in piece.elements:
                    ids[e] = fresh
                    fresh += 1
                    elements.append(ids[e])
                    labels[ids[e]] = piece.labels[e]
                relations += [(ids[u], ids[l]) for u, l in piece.covers]
                relations.append((ids[piece.minimal_elements()[0]], target))
    return LabeledPoset(elements, relations, labels)


def opposite(p: LabeledPoset) -> LabeledPoset:
    return LabeledPoset(p.elements, [(l, u) for u, l in p.covers], p.labels)


def renumber(p: LabeledPoset, start: int = 0) -> LabeledPoset:
    """Same poset with elements renamed ``start, start+1, ...`` in topological order."""
    ids = {e: start + i for i, e in enumerate(p.topological_order())}
    return LabeledPoset(sorted(ids.values()), [(ids[u], ids[l]) for u, l in p.covers],
                        {ids[e]: lab for e, lab in p.labels.items()})


def chain(labels: Sequence[object]) -> LabeledPoset:
    """Chain with ``labels[0]`` at the bottom."""
    n = len(labels)
    return LabeledPoset(range(n), [(i + 1, i) for i in range(n - 1)], dict(enumerate(labels)))


# ---------------------------------------------------------------------------
# isomorphism


def isomorphisms(p: LabeledPoset, q: LabeledPoset) -> Iterator[dict]:
    """Label- and order-preserving bijections ``p -> q``."""
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return

    def sig(r, e):
        return (label_text(r.labels[e]), len(r.down_set(e)), len(r.up_set(e)),
                len(r.lower_covers(e)), len(r.upper_covers(e)))

    order = list(p.topological_order())
    cand = {e: [f for f in q.elements if sig(q, f) == sig(p, e)] for e in order}
    if any(not c for c in cand.values()):
        return
    image: dict = {}
    used: set = set()

    def extend(i):
        if i == len(order):
            yield dict(image)
            return
        e = order[i]
        for f in cand[e]:
            if f in used:
                continue
            if all((d in p.lower_covers(e)) == (image[d] in q.lower_covers(f))
                   and (d in p.upper_covers(e)) == (image[d] in q.upper_covers(f))
                   for d in order[:i]):
                image[e] = f
                used.add(f)
                yield from extend(i + 1)
                used.discard(f)
                del image[e]

    yield from extend(0)


def is_isomorphic(p: LabeledPoset, q: LabeledPoset) -> bool:
    return next(isomorphisms(p, q), None) is not None


# ---------------------------------------------------------------------------
# DOT


def to_dot(p: LabeledPoset, names: Mapping[int, str] | None = None) -> str:
    lines = ["digraph P {"]
    for e in p.elements:
        lines.append(f'  {e} [label="{label_text(p.labels[e], names)}"];')
    for u, l in p.covers:
        lines.append(f"  {u} -> {l};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r'^\s*(\d+)\s*\[label="([^"]*)"\];\s*$')
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*->\s*(\d+);\s*$")


def parse_dot(text: str, names: Mapping[str, int] | None = None) -> LabeledPoset:
    elements, labels, covers = [], {}, []
    for line in text.splitlines():
        m = _DOT_NODE.match(line)
        if m:
            e = int(m.group(1))
            elements.append(e)
            labels[e] = parse_label(m.group(2), names)
            continue
        m = _DOT_EDGE.match(line)
        if m:
            covers.append((int(m.group(1)), int(m.group(2))))
    return LabeledPoset(elements, covers, labels)


# ---------------------------------------------------------------------------
# exhaustive search for a simply-labeled pointed poset


@dataclass
class PosetSearchReport:
    found: LabeledPoset | None
    shapes_checked: int
    labelings_checked: int


def _pointed_shapes(max_size: int, max_ideals: int) -> Iterator[LabeledPoset]:
    """Unlabeled pointed posets with at most ``max_ideals`` ideals, up to iso.

    Grown by adding a new maximal element over a non-empty ideal; the ideal
    count only grows, so shapes with too many ideals are cut early.
    """
    root = LabeledPoset([0], [], {0: 0})
    level = [root]
    yield root
    for size in range(2, max_size + 1):
        buckets: dict = {}
        nxt = []
        for shape in level:
            for ideal in enumerate_ideals(shape):
                if not ideal:
                    continue
                new = size - 1
                rel = list(shape.covers) + [(new, e) for e in ideal]
                cand = LabeledPoset(shape.elements + (new,), rel, {**shape.labels, new: 0})
                if count_ideals(cand) > max_ideals:
                    continue
                key = (len(cand.covers), count_ideals(cand),
                       tuple(sorted((len(cand.down_set(e)), len(cand.up_set(e)))
                                    for e in cand.elements)))
                bucket = buckets.setdefault(key, [])
                if any(is_isomorphic(cand, other) for other in bucket):
                    continue
                bucket.append(cand)
                nxt.append(cand)
        level = nxt
        yield from level


def _multiset_permutations(items: list) -> Iterator[tuple]:
    items = sorted(items)
    n = len(items)
    used = [False] * n
    cur: list = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        prev = object()
        for i in range(n):
            if used[i] or items[i] == prev:
                continue
            prev = items[i]
            used[i] = True
            cur.append(items[i])
            yield from rec()
            cur.pop()
            used[i] = False

    yield from rec()


def search_simple_pointed_poset(f: Polynomial, max_size: int = 8) -> PosetSearchReport:
    """Look for a simply-labeled pointed poset on ``<= max_size`` elements with ideal function ``f``.

    Shapes are generated exhaustively up to isomorphism, restricted to those
    whose ideal count equals ``f(1, ..., 1)``.  For a shape of size ``s``
    the only ideal of size ``s`` is the whole poset and the only ideal of
    size 1 is the minimum, so the degree-``s`` part of ``f`` must be one
    monomial (the label multiset) and the degree-1 part must be the label of
    the minimum.  All labelings compatible with that are then tried.
    """
    shapes = labelings = 0
    if f.constant_term != 1 or any(c <= 0 for c in f.coefficients()):
        return PosetSearchReport(None, 0, 0)
    total = sum(f.coefficients())
    by_degree: dict[int, list] = {}
    for c, exps in f.terms():
        by_degree.setdefault(sum(exps.values()), []).append((c, exps))
    linear = by_degree.get(1, [])
    if len(linear) != 1 or linear[0][0] != 1:
        return PosetSearchReport(None, 0, 0)
    min_label = next(iter(linear[0][1]))
    for shape in _pointed_shapes(max_size, total):
        if count_ideals(shape) != total:
            continue
        shapes += 1
        size = len(shape)
        top = by_degree.get(size, [])
        if len(top) != 1 or top[0][0] != 1:
            continue
        multiset = dict(top[0][1])
        if multiset.get(min_label, 0) < 1:
            continue
        multiset[min_label] -= 1
        rest_labels = [v for v, e in multiset.items() for _ in range(e)]
        m = shape.minimal_elements()[0]
        others = [e for e in shape.topological_order() if e != m]
        for perm in _multiset_permutations(rest_labels):
            labelings += 1
            labels = {m: min_label, **dict(zip(others, perm))}
            cand = LabeledPoset(shape.elements, shape.covers, labels)
            if ideal_function(cand) == f:
                return PosetSearchReport(cand, shapes, labelings)
    return PosetSearchReport(None, shapes, labelings)
