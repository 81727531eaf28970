"""Exact sparse polynomials over the integers, with Laurent and rational wrappers.

Monomials are packed into one Python int: the exponent of variable ``v``
lives in bits ``[16*v, 16*v + 16)``.  Multiplying two monomials is then a
single integer addition, which is what keeps F-polynomial mutation and ideal
enumeration fast in pure Python.  The top bit of each 16-bit field is a guard
used by the divisibility test, so exponents must stay below ``2**15``.

Comparing packed monomials as ints is the lexicographic order with the
highest variable most significant.  That order is multiplicative, so it is
used as the term order for long division.  Printing uses graded-lex instead::

    1 + X2 + X1*X2 + 2*X1*X2*X3
"""
from __future__ import annotations

import heapq
import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

_FIELD = 16
_MASK = (1 << _FIELD) - 1
_GUARD_BIT = 1 << (_FIELD - 1)
_MAX_EXP = _GUARD_BIT - 1


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def _pack(exps: Mapping[int, int]) -> int:
    m = 0
    for v, e in exps.items():
        if e < 0:
            raise ValueError(f"negative exponent {e} for X{v}")
        if e > _MAX_EXP:
            raise OverflowError(f"exponent {e} too large")
        if v < 0:
            raise ValueError(f"variable ids are non-negative, got {v}")
        m += e << (_FIELD * v)
    return m


def _unpack(m: int) -> dict[int, int]:
    out = {}
    v = 0
    while m:
        e = m & _MASK
        if e:
            out[v] = e
        m >>= _FIELD
        v += 1
    return out


_GUARDS = [0]


def _guard(nfields: int) -> int:
    while len(_GUARDS) <= nfields:
        k = len(_GUARDS)
        _GUARDS.append(_GUARDS[-1] | (_GUARD_BIT << (_FIELD * (k - 1))))
    return _GUARDS[nfields]


def _divides(b: int, a: int) -> bool:
    """True iff monomial ``b`` divides monomial ``a``."""
    if b > a:
        return False
    g = _guard((a.bit_length() + _FIELD - 1) // _FIELD)
    return ((a | g) - b) & g == g


def _degree(m: int) -> int:
    d = 0
    while m:
        d += m & _MASK
        m >>= _FIELD
    return d


def _gradlex_key(m: int):
    exps = _unpack(m)
    return (sum(exps.values()), tuple((v, -e) for v, e in sorted(exps.items())))


def _mono_min(a: int, b: int) -> int:
    """Fieldwise minimum (gcd of two monomials)."""
    out = 0
    shift = 0
    while a and b:
        out |= min(a & _MASK, b & _MASK) << shift
        a >>= _FIELD
        b >>= _FIELD
        shift += _FIELD
    return out


class Polynomial:
    """Immutable polynomial with integer coefficients.

    Internally a dict from packed monomial to non-zero int coefficient.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._t = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "Polynomial":
        p = cls.__new__(cls)
        p._t = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, v: int, power: int = 1) -> "Polynomial":
        return cls._raw({_pack({v: power}): 1})

    @classmethod
    def monomial(cls, exps: Mapping[int, int], coeff: int = 1) -> "Polynomial":
        return cls._raw({_pack(exps): coeff} if coeff else {})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Mapping[int, int]]]) -> "Polynomial":
        out: dict[int, int] = {}
        for c, exps in terms:
            m = _pack(exps)
            out[m] = out.get(m, 0) + c
        return cls({m: c for m, c in out.items() if c})

    # inspection ---------------------------------------------------------
    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def terms(self) -> list[tuple[int, dict[int, int]]]:
        """(coeff, exponents) pairs in graded-lex order."""
        return [(self._t[m], _unpack(m)) for m in sorted(self._t, key=_gradlex_key)]

    def coefficients(self) -> list[int]:
        return list(self._t.values())

    @property
    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def variables(self) -> set[int]:
        out: set[int] = set()
        for m in self._t:
            out.update(_unpack(m))
        return out

    def degree(self) -> int:
        return max((_degree(m) for m in self._t), default=-1)

    def degree_in(self, v: int) -> int:
        shift = _FIELD * v
        return max(((m >> shift) & _MASK for m in self._t), default=0)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def monomial_content(self) -> dict[int, int]:
        """Exponents of the largest monomial dividing every term."""
        it = iter(self._t)
        g = next(it, 0)
        for m in it:
            if not g:
                break
            g = _mono_min(g, m)
        return _unpack(g)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._t) > len(self._t):
            self, other = other, self
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return Polynomial._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            return Polynomial._raw({m + mb: c * cb for m, c in a.items()})
        out: dict[int, int] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial; use RationalExpr")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, q: "Polynomial") -> "Polynomial":
        return exact_div(self, q)

    def __truediv__(self, other):
        return RationalExpr(self, _coerce(other))

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if isinstance(other, Polynomial):
            return self._t == other._t
        if isinstance(other, RationalExpr):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # transformations ----------------------------------------------------
    def mul_monomial(self, exps: Mapping[int, int]) -> "Polynomial":
        m0 = _pack(exps)
        return Polynomial._raw({m + m0: c for m, c in self._t.items()})

    def div_monomial(self, exps: Mapping[int, int]) -> "Polynomial":
        m0 = _pack(exps)
        out = {}
        for m, c in self._t.items():
            if not _divides(m0, m):
                raise NotDivisible("monomial does not divide every term")
            out[m - m0] = c
        return Polynomial._raw(out)

    def set_zero(self, gone: Iterable[int]) -> "Polynomial":
        """Substitute ``X_v = 0`` for every ``v`` in ``gone``."""
        mask = 0
        for v in gone:
            mask |= _MASK << (_FIELD * v)
        return Polynomial._raw({m: c for m, c in self._t.items() if not m & mask})

    def rename(self, mapping: Mapping[int, int]) -> "Polynomial":
        """Rename variables; unmapped ones are kept.  Collisions add up."""
        out: dict[int, int] = {}
        for m, c in self._t.items():
            exps: dict[int, int] = {}
            for v, e in _unpack(m).items():
                w = mapping.get(v, v)
                exps[w] = exps.get(w, 0) + e
            k = _pack(exps)
            out[k] = out.get(k, 0) + c
        return Polynomial({k: c for k, c in out.items() if c})

    def substitute(self, sigma) -> "RationalExpr":
        return substitute(self, sigma)

    def evaluate(self, point: Mapping[int, Fraction | int]) -> Fraction:
        return eval_rational(self, point)

    # text ---------------------------------------------------------------
    def to_text(self, names: Mapping[int, str] | None = None) -> str:
        if not self._t:
            return "0"
        parts = []
        for c, exps in self.terms():
            factors = []
            for v, e in sorted(exps.items()):
                label = names[v] if names is not None else str(v)
                factors.append(f"X{label}" + (f"^{e}" if e > 1 else ""))
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def to_structured(self) -> list[dict]:
        return [{"coeff": c, "exps": {str(v): e for v, e in sorted(exps.items())}}
                for c, exps in self.terms()]

    @classmethod
    def from_structured(cls, data: list[dict]) -> "Polynomial":
        return cls.from_terms((t["coeff"], {int(v): e for v, e in t["exps"].items()})
                              for t in data)

    @classmethod
    def parse(cls, text: str, names: Mapping[str, int] | None = None) -> "Polynomial":
        return parse(text, names)


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial.constant(x)
    return NotImplemented


ZERO = Polynomial.constant(0)
ONE = Polynomial.constant(1)


def var(v: int) -> Polynomial:
    return Polynomial.var(v)


def const(c: int) -> Polynomial:
    return Polynomial.constant(c)


def product(polys: Iterable[Polynomial]) -> Polynomial:
    out = ONE
    for p in polys:
        out = out * p
    return out


def exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return ``r`` with ``r * q == p``; raise NotDivisible otherwise."""
    if not q._t:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(q._t) == 1:
        (mq, cq), = q._t.items()
        out = {}
        for m, c in p._t.items():
            if c % cq or not _divides(mq, m):
                raise NotDivisible(f"{q} does not divide {p}")
            out[m - mq] = c // cq
        return Polynomial._raw(out)
    lead = max(q._t)
    lc = q._t[lead]
    rest = [(m, c) for m, c in q._t.items() if m != lead]
    rem = dict(p._t)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quot: dict[int, int] = {}
    while heap:
        m = -heapq.heappop(heap)
        c = rem.pop(m, 0)
        if not c:
            continue
        while heap and heap[0] == -m:
            heapq.heappop(heap)
        if c % lc or not _divides(lead, m):
            raise NotDivisible(f"{q} does not divide {p}")
        t = m - lead
        qc = c // lc
        quot[t] = qc
        for mr, cr in rest:
            k = t + mr
            old = rem.get(k)
            if old is None:
                rem[k] = -qc * cr
                heapq.heappush(heap, -k)
            else:
                s = old - qc * cr
                if s:
                    rem[k] = s
                else:
                    del rem[k]
    return Polynomial._raw(quot)


# ---------------------------------------------------------------------------
# parsing

_FACTOR = re.compile(r"X(\([^)]*\)|[A-Za-z0-9_']+)(?:\^(\d+))?$")


def _split_terms(text: str) -> list[tuple[int, str]]:
    out = []
    depth = 0
    sign = 1
    buf = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-":
            body = "".join(buf).strip()
            if body:
                out.append((sign, body))
            elif ch == "-":
                sign = -sign
                buf = []
                continue
            sign = 1 if ch == "+" else -1
            buf = []
            continue
        buf.append(ch)
    body = "".join(buf).strip()
    if body:
        out.append((sign, body))
    return out


def parse(text: str, names: Mapping[str, int] | None = None) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_text`.

    ``names`` maps display labels back to variable ids; without it labels
    must be integers.
    """
    terms = []
    for sign, body in _split_terms(text.replace(" ", "")):
        coeff = sign
        exps: dict[int, int] = {}
        for factor in body.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            match = _FACTOR.match(factor)
            if not match:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            label, power = match.group(1), int(match.group(2) or 1)
            if names is not None:
                if label not in names:
                    raise ValueError(f"unknown variable X{label}")
                v = names[label]
            elif label.isdigit():
                v = int(label)
            else:
                raise ValueError(f"variable X{label} needs a name map")
            exps[v] = exps.get(v, 0) + power
        terms.append((coeff, exps))
    return Polynomial.from_terms(terms)


# ---------------------------------------------------------------------------
# rational expressions


def _lead_sign(p: Polynomial) -> int:
    return 1 if p._t[max(p._t)] > 0 else -1


class RationalExpr:
    """A quotient ``num / den`` of polynomials.

    Only common monomial content and the overall sign are normalized away;
    there is no polynomial gcd, so equality is tested by cross-multiplying.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | int, den: Polynomial | int = 1):
        num = _coerce(num)
        den = _coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = ONE
        else:
            g = _mono_min(_pack(num.monomial_content()), _pack(den.monomial_content()))
            if g:
                exps = _unpack(g)
                num = num.div_monomial(exps)
                den = den.div_monomial(exps)
            if _lead_sign(den) < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def lift(x) -> "RationalExpr":
        if isinstance(x, RationalExpr):
            return x
        if isinstance(x, (Polynomial, int)):
            return RationalExpr(x)
        if isinstance(x, Fraction):
            return RationalExpr(x.numerator, x.denominator)
        raise TypeError(f"cannot lift {type(x).__name__} to RationalExpr")

    def __add__(self, other):
        o = RationalExpr.lift(other)
        if self.den == o.den:
            return RationalExpr(self.num + o.num, self.den)
        return RationalExpr(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalExpr.lift(other))

    def __rsub__(self, other):
        return RationalExpr.lift(other) - self

    def __mul__(self, other):
        o = RationalExpr.lift(other)
        return RationalExpr(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalExpr":
        return RationalExpr(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalExpr.lift(other).inverse()

    def __rtruediv__(self, other):
        return RationalExpr.lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return RationalExpr(self.den ** (-e), self.num ** (-e))
        return RationalExpr(self.num ** e, self.den ** e)

    def __eq__(self, other):
        try:
            o = RationalExpr.lift(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        try:
            self.to_polynomial()
        except NotDivisible:
            return False
        return True

    def to_polynomial(self) -> Polynomial:
        return exact_div(self.num, self.den)

    def evaluate(self, point: Mapping[int, Fraction | int]) -> Fraction:
        d = eval_rational(self.den, point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return eval_rational(self.num, point) / d

    def to_text(self, names: Mapping[int, str] | None = None) -> str:
        if self.den == ONE:
            return self.num.to_text(names)
        return f"({self.num.to_text(names)})/({self.den.to_text(names)})"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RationalExpr({self.to_text()!r})"

    @classmethod
    def parse(cls, text: str, names: Mapping[str, int] | None = None) -> "RationalExpr":
        text = text.strip()
        if text.startswith("(") and ")/(" in text and text.endswith(")"):
            num, den = text[1:-1].split(")/(", 1)
            return cls(parse(num, names), parse(den, names))
        return cls(parse(text, names))


def substitute(p: Polynomial, sigma: Mapping[int, object]) -> RationalExpr:
    """Compose ``p`` with ``sigma``; unmapped variables stay put.

    Works over the common denominator ``prod_v den_v ** deg_v(p)`` so the
    result is one quotient rather than a sum of quotients.
    """
    vs = sorted(p.variables())
    nums, dens, top = {}, {}, {}
    for v in vs:
        r = RationalExpr.lift(sigma[v]) if v in sigma else RationalExpr(var(v))
        nums[v], dens[v], top[v] = r.num, r.den, p.degree_in(v)
    cache: dict[tuple, Polynomial] = {}

    def power(kind, v, e):
        key = (kind, v, e)
        if key not in cache:
            base = nums[v] if kind == "n" else dens[v]
            cache[key] = base ** e
        return cache[key]

    acc: dict[int, int] = {}
    for m, c in p._t.items():
        exps = _unpack(m)
        term = Polynomial.constant(c)
        for v in vs:
            e = exps.get(v, 0)
            if e:
                term = term * power("n", v, e)
            if top[v] - e and dens[v] != ONE:
                term = term * power("d", v, top[v] - e)
        for t, x in term._t.items():
            acc[t] = acc.get(t, 0) + x
    num = Polynomial._raw({t: x for t, x in acc.items() if x})
    den = ONE
    for v in vs:
        if dens[v] != ONE:
            den = den * power("d", v, top[v])
    return RationalExpr(num, den)


def _times_one_plus(coeffs: list[int], e: int) -> list[int]:
    """Coefficients (lowest first) multiplied by ``(1 + x) ** e``."""
    out = list(coeffs)
    for _ in range(e):
        out = [a + b for a, b in zip(out + [0], [0] + out)]
    return out


def _over_one_plus(coeffs: list[int], e: int) -> list[int]:
    """Exact division of coefficients (lowest first) by ``(1 + x) ** e``."""
    out = list(coeffs)
    for _ in range(e):
        if len(out) < 2:
            raise NotDivisible("not divisible by 1 + x")
        q = [0] * (len(out) - 1)
        rem = list(out)
        for i in range(len(out) - 1, 0, -1):
            q[i - 1] = rem[i]
            rem[i - 1] -= rem[i]
        if rem[0]:
            raise NotDivisible("not divisible by 1 + x")
        out = q
    return out


def substitute_exchange(p: Polynomial, k: int, column: Sequence[int], extra: int = 0) -> Polynomial:
    """``p`` under ``X_k -> 1/X_k`` and ``X_i -> X_i X_k^[-a]+ (1 + X_k)^a`` with ``a = column[i]``,
    times ``(1 + X_k) ** extra``.

    Every monomial becomes a monomial times a power of ``1 + X_k``, so terms
    are combined in ``X_k`` one coefficient row at a time and the common
    power of ``1 + X_k`` is divided out exactly.  Raises
    :class:`NotDivisible` when the result is not a polynomial.
    """
    shift = _FIELD * k
    staged = []
    for m, c in p._t.items():
        ek = (m >> shift) & _MASK
        rest = m - (ek << shift)
        s, xk = 0, -ek
        for v, e in _unpack(rest).items():
            a = column[v] if v < len(column) else 0
            s += a * e
            if a < 0:
                xk -= a * e
        staged.append((rest, xk, s, c))
    if not staged:
        return ZERO
    smin = min(t[2] for t in staged) + extra
    lo = min(t[1] for t in staged)
    rows: dict[int, list[int]] = {}
    for rest, xk, s, c in staged:
        row = rows.setdefault(rest, [])
        piece = _times_one_plus([0] * (xk - lo) + [c], s + extra - smin)
        if len(row) < len(piece):
            row.extend([0] * (len(piece) - len(row)))
        for i, x in enumerate(piece):
            row[i] += x
    out: dict[int, int] = {}
    for rest, row in rows.items():
        row = _over_one_plus(row, -smin) if smin < 0 else _times_one_plus(row, smin)
        for i, x in enumerate(row):
            if not x:
                continue
            e = i + lo
            if e < 0:
                raise NotDivisible("negative power of X_k in the result")
            out[rest + (e << shift)] = x
    return Polynomial._raw(out)


def eval_rational(p: Polynomial, point: Mapping[int, Fraction | int]) -> Fraction:
    """Exact value of ``p`` at a rational point."""
    total = Fraction(0)
    for m, c in p._t.items():
        value = Fraction(c)
        for v, e in _unpack(m).items():
            value *= Fraction(point[v]) ** e
        total += value
    return total


# ---------------------------------------------------------------------------
# Laurent polynomials


class Laurent:
    """``X**shift * poly`` with ``poly`` free of monomial content.

    ``shift`` may have negative entries.  Units of the Laurent ring are the
    signed monomials, so division only needs the content-free parts.
    """

    __slots__ = ("poly", "shift")

    def __init__(self, poly: Polynomial | int, shift: Mapping[int, int] | None = None):
        poly = _coerce(poly)
        shift = dict(shift or {})
        if poly:
            content = poly.monomial_content()
            if content:
                poly = poly.div_monomial(content)
                for v, e in content.items():
                    shift[v] = shift.get(v, 0) + e
        else:
            shift = {}
        self.poly = poly
        self.shift = {v: e for v, e in shift.items() if e}

    @classmethod
    def monomial(cls, exps: Mapping[int, int], coeff: int = 1) -> "Laurent":
        return cls(Polynomial.constant(coeff), exps)

    @staticmethod
    def lift(x) -> "Laurent":
        if isinstance(x, Laurent):
            return x
        return Laurent(_coerce(x))

    def __mul__(self, other):
        o = Laurent.lift(other)
        shift = dict(self.shift)
        for v, e in o.shift.items():
            shift[v] = shift.get(v, 0) + e
        return Laurent(self.poly * o.poly, shift)

    __rmul__ = __mul__

    def __add__(self, other):
        o = Laurent.lift(other)
        if not o.poly:
            return self
        if not self.poly:
            return o
        base = {v: min(self.shift.get(v, 0), o.shift.get(v, 0))
                for v in set(self.shift) | set(o.shift)}
        a = self.poly.mul_monomial({v: self.shift.get(v, 0) - e for v, e in base.items()})
        b = o.poly.mul_monomial({v: o.shift.get(v, 0) - e for v, e in base.items()})
        return Laurent(a + b, base)

    __radd__ = __add__

    def __neg__(self):
        return Laurent(-self.poly, self.shift)

    def __sub__(self, other):
        return self + (-Laurent.lift(other))

    def __pow__(self, e: int):
        if e < 0:
            if not self.poly.is_monomial():
                raise NotDivisible("only monomials are invertible")
            c = self.poly.constant_term
            if c not in (1, -1):
                raise NotDivisible("only signed monomials are invertible")
            return Laurent(Polynomial.constant(c ** -e), {v: s * e for v, s in self.shift.items()})
        return Laurent(self.poly ** e, {v: s * e for v, s in self.shift.items()})

    def exact_div(self, other) -> "Laurent":
        o = Laurent.lift(other)
        q = exact_div(self.poly, o.poly)
        shift = dict(self.shift)
        for v, e in o.shift.items():
            shift[v] = shift.get(v, 0) - e
        return Laurent(q, shift)

    def __eq__(self, other):
        try:
            o = Laurent.lift(other)
        except TypeError:
            return NotImplemented
        if not self.poly and not o.poly:
            return True
        return self.poly == o.poly and self.shift == o.shift

    __hash__ = None

    def is_monomial(self) -> bool:
        return self.poly.is_monomial() and self.poly.constant_term == 1

    def __len__(self):
        return len(self.poly)

    def to_text(self, names: Mapping[int, str] | None = None) -> str:
        if not self.shift:
            return self.poly.to_text(names)
        mono = "*".join(f"X{names[v] if names else v}^{e}" if e != 1 else f"X{names[v] if names else v}"
                        for v, e in sorted(self.shift.items()))
        if self.poly == ONE:
            return mono
        if self.poly == -ONE:
            return f"-{mono}"
        return f"{mono}*({self.poly.to_text(names)})"

    def __repr__(self):
        return f"Laurent({self.to_text()!r})"
