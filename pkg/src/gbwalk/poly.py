"""Exact multivariate polynomials over the rationals.

A polynomial in ``n`` variables is a mapping from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  Monomials are plain tuples of
non-negative ints; difference vectors (``u - v``) are plain tuples of ints.
Nothing here knows about term orders beyond an optional ``key`` callable, so
that :mod:`gbwalk.orders` can sit on top of this module.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import ArityError, ParseError, StepCapExceeded

Monomial = tuple
DEFAULT_STEP_CAP = 10**6
_MAX_EXPONENT = 2**63 - 1


def _mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def divides(a, b):
    """True if the monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def degree_key(m):
    """Fallback ordering key: total degree, then exponents."""
    return (sum(m), m)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ArityError(f"monomial {mono} has arity {len(mono)}, ring has {nvars}")
            if any(e < 0 or e > _MAX_EXPONENT for e in mono):
                raise ValueError(f"exponent out of range in {mono}")
            coeff = Fraction(coeff)
            acc[mono] = acc.get(mono, 0) + coeff
        self.nvars = nvars
        self.terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # terms must already be canonical: Fraction coefficients, no zeros
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, [((0,) * nvars, c)])

    @classmethod
    def monomial(cls, exponents, coeff=1):
        exponents = tuple(exponents)
        return cls(len(exponents), [(exponents, coeff)])

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ArityError(f"ring arity mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.nvars)
            other = Fraction(other)
            return Polynomial._raw(self.nvars, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_add(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_term(self, coeff, mono):
        """Multiply by the single term ``coeff * x^mono``."""
        coeff = Fraction(coeff)
        if len(mono) != self.nvars:
            raise ArityError("term arity does not match the ring")
        if not coeff:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars, {_mono_add(m, mono): c * coeff for m, c in self.terms.items()}
        )

    def coeff(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def support(self):
        return set(self.terms)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_monomial(self):
        return len(self.terms) == 1

    def sorted_terms(self, key: Optional[Callable] = None):
        """Terms, largest first, under ``key`` (default: degree then exponents)."""
        key = key or degree_key
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def __repr__(self):
        names = default_names(self.nvars)
        return f"Polynomial({format_polynomial(self, names)!r})"


def support(f: Polynomial):
    return f.support()


def add(f, g):
    return f + g


def subtract(f, g):
    return f - g


def multiply_by_term(f, coeff, mono):
    return f.mul_term(coeff, mono)


def initial_form(f: Polynomial, w: Sequence) -> Polynomial:
    """Sub-polynomial of ``f`` whose terms maximize the weight ``<w, v>``."""
    if not f:
        raise ValueError("initial form of the zero polynomial is undefined")
    if len(w) != f.nvars:
        raise ArityError("weight arity does not match the ring")
    weights = {m: sum(a * b for a, b in zip(w, m)) for m in f.terms}
    top = max(weights.values())
    return Polynomial._raw(f.nvars, {m: f.terms[m] for m, s in weights.items() if s == top})


@dataclass(frozen=True)
class MarkedPolynomial:
    """A nonzero polynomial with one distinguished term."""

    body: Polynomial
    marked: Monomial

    def __post_init__(self):
        object.__setattr__(self, "marked", tuple(self.marked))
        if self.marked not in self.body.terms:
            raise ValueError(f"marked monomial {self.marked} is not in the support")

    @classmethod
    def by_order(cls, f: Polynomial, order) -> "MarkedPolynomial":
        """Mark ``f`` at its largest monomial under ``order``."""
        if not f:
            raise ValueError("cannot mark the zero polynomial")
        return cls(f, max(f.terms, key=order.key))

    @property
    def nvars(self):
        return self.body.nvars

    @property
    def lead_coeff(self):
        return self.body.terms[self.marked]

    def tail(self):
        t = dict(self.body.terms)
        del t[self.marked]
        return Polynomial._raw(self.body.nvars, t)

    def monic(self):
        c = self.lead_coeff
        if c == 1:
            return self
        return MarkedPolynomial(self.body * (1 / c), self.marked)

    def boundary(self):
        return bounding_vectors(self)

    def agrees_with(self, order):
        return max(self.body.terms, key=order.key) == self.marked


def bounding_vectors(g: MarkedPolynomial):
    """``{u - u' : u' in supp(g), u' != u}`` for the marked exponent ``u``."""
    u = g.marked
    return {_mono_sub(u, v) for v in g.body.terms if v != u}


def normal_form(
    f: Polynomial,
    basis: Sequence[MarkedPolynomial],
    order=None,
    step_cap: int = DEFAULT_STEP_CAP,
) -> Polynomial:
    """Fully reduce ``f`` modulo the marked polynomials in ``basis``.

    The largest reducible term is reduced first, where "largest" is taken
    under ``order`` when supplied and under total degree otherwise.  Only
    the markings drive the division, so the result is the unique remainder
    whenever the markings come from a common term order.  Raises
    :class:`StepCapExceeded` after ``step_cap`` reduction steps.
    """
    n = f.nvars
    reducers = []
    for g in basis:
        if g.nvars != n:
            raise ArityError("basis member arity does not match the ring")
        lc = g.lead_coeff
        tail = [(m, c) for m, c in g.body.terms.items() if m != g.marked]
        reducers.append((g.marked, lc, tail))
    if not reducers:
        return f

    keyf = order.key if order is not None else degree_key

    def hk(m):
        k = keyf(m)
        return tuple(-x for x in k) if order is not None else (-k[0], tuple(-x for x in k[1]))

    p = dict(f.terms)
    rem: dict = {}
    heap = [(hk(m), m) for m in p]
    heapq.heapify(heap)
    queued = set(p)
    reducer_cache: dict = {}
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = p.pop(m, None)
        if c is None:
            continue
        r = reducer_cache.get(m, False)
        if r is False:
            r = None
            for cand in reducers:
                if divides(cand[0], m):
                    r = cand
                    break
            reducer_cache[m] = r
        if r is None:
            rem[m] = c
            continue
        steps += 1
        if steps > step_cap:
            raise StepCapExceeded(step_cap)
        u, lc, tail = r
        factor = c if lc == 1 else c / lc
        shift = _mono_sub(m, u)
        for mm, cc in tail:
            t = _mono_add(mm, shift)
            if t in rem:
                v = rem[t] - factor * cc
                if v:
                    rem[t] = v
                else:
                    del rem[t]
                continue
            v = p.get(t, 0) - factor * cc
            if v:
                p[t] = v
                if t not in queued:
                    queued.add(t)
                    heapq.heappush(heap, (hk(t), t))
            else:
                p.pop(t, None)
    return Polynomial._raw(n, rem)


# ---------------------------------------------------------------------------
# text syntax

def default_names(n):
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()\[\]]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", col)
        start = m.start(m.lastindex) + 1
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


class _Parser:
    def __init__(self, text, names):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = {name: k for k, name in enumerate(names)}
        self.n = len(names)
        self.marks = []

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", 1)
        out = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return out

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term() * sign
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                acc = acc + t if tok[1] == "+" else acc - t
            else:
                return acc

    def _starts_factor(self, tok):
        return tok[0] in ("num", "name") or (tok[0] == "op" and tok[1] in "([")

    def term(self):
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                d = self.factor()
                if not d or d.total_degree() != 0:
                    raise ParseError("division only by nonzero constants", tok[2])
                acc = acc * (1 / d.coeff((0,) * self.n))
            elif self._starts_factor(tok):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("^", "**"):
            self.take()
            e = self.take()
            if e[0] != "num":
                raise ParseError("exponent must be a non-negative integer", e[2])
            return base ** e[1]
        return base

    def base(self):
        tok = self.take()
        kind, val, col = tok
        if kind == "num":
            return Polynomial.constant(self.n, val)
        if kind == "name":
            if val not in self.names:
                raise ParseError(f"unknown variable {val!r}", col)
            return Polynomial.variable(self.n, self.names[val])
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "op" and val == "[":
            inner = self.expr()
            self.expect("]")
            if len(inner) != 1:
                raise ParseError("a marking must enclose a single term", col)
            self.marks.append((next(iter(inner.terms)), col))
            return inner
        raise ParseError(f"unexpected token {val!r}", col)


def parse_marked(text: str, names: Sequence[str]):
    """Parse a polynomial that may carry one ``[term]`` marking.

    Returns ``(polynomial, marked_monomial_or_None)``.
    """
    p = _Parser(text, names)
    f = p.parse()
    if len(p.marks) > 1:
        raise ParseError("more than one marked term", p.marks[1][1])
    if not p.marks:
        return f, None
    mono, col = p.marks[0]
    if mono not in f.terms:
        raise ParseError("marked term cancels out", col)
    return f, mono


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    f, _ = parse_marked(text, names)
    return f


def _format_monomial(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(
    f: Polynomial,
    names: Sequence[str],
    key: Optional[Callable] = None,
    lead: Optional[Monomial] = None,
    bracket_lead: bool = False,
) -> str:
    """Render ``f`` largest term first under ``key``; ``lead`` goes first."""
    if not f:
        return "0"
    items = f.sorted_terms(key)
    if lead is not None:
        items = [(lead, f.terms[lead])] + [t for t in items if t[0] != lead]
    out = []
    for k, (m, c) in enumerate(items):
        mono = _format_monomial(m, names)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if bracket_lead and m == lead:
            body = f"[{body}]"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def format_marked(g: MarkedPolynomial, names, key=None, bracket=False):
    return format_polynomial(g.body, names, key=key, lead=g.marked, bracket_lead=bracket)
