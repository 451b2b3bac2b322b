"""Rational group orders given by integer weight matrices.

``u < v`` under a matrix order iff the tuple of row weights of ``u`` is
lexicographically smaller than that of ``v``.  Rows need not be square:
a refined order simply prepends a weight row, and a matrix with more rows
than columns is fine as long as it has full column rank.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import ArityError, InvalidOrder, ParseError


def _dot(row, v):
    return sum(a * b for a, b in zip(row, v))


def integer_rank(rows) -> int:
    """Rank over the rationals, by fraction-exact elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def scale_to_integers(w: Sequence) -> tuple:
    """Positive multiple of a rational vector with coprime integer entries."""
    w = [Fraction(x) for x in w]
    den = lcm(*(x.denominator for x in w)) if w else 1
    ints = [int(x * den) for x in w]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g > 1 else tuple(ints)


@dataclass(frozen=True)
class MatrixOrder:
    rows: tuple
    name: str = "matrix"

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows:
            raise InvalidOrder("an order needs at least one row")
        n = len(rows[0])
        if n == 0 or any(len(r) != n for r in rows):
            raise InvalidOrder("order rows must share a positive length")
        object.__setattr__(self, "rows", rows)

    @property
    def nvars(self):
        return len(self.rows[0])

    def _arity(self, v):
        if len(v) != self.nvars:
            raise ArityError(f"vector of length {len(v)} vs order on {self.nvars} variables")

    def weights(self, v):
        return tuple(_dot(r, v) for r in self.rows)

    # used as a sort/max key on monomials
    def key(self, v):
        return tuple(_dot(r, v) for r in self.rows)

    def compare(self, u, v) -> int:
        """-1, 0, 1 as ``u`` is less than, tied with, greater than ``v``."""
        self._arity(u)
        self._arity(v)
        for r in self.rows:
            a, b = _dot(r, u), _dot(r, v)
            if a != b:
                return -1 if a < b else 1
        return 0

    def sign(self, v) -> int:
        """Sign of ``v`` relative to 0: the sign of its first nonzero weight."""
        self._arity(v)
        for r in self.rows:
            s = _dot(r, v)
            if s:
                return 1 if s > 0 else -1
        return 0

    def is_full_rank(self):
        return integer_rank(self.rows) == self.nvars

    def is_term_order(self):
        n = self.nvars
        return all(self.sign(tuple(int(i == j) for j in range(n))) > 0 for i in range(n))

    def truncated(self, p):
        return MatrixOrder(self.rows[:p], name=f"{self.name}[:{p}]")

    def require_full_rank(self):
        if not self.is_full_rank():
            raise InvalidOrder(f"order {self.name} is not of full rank")
        return self

    def __str__(self):
        return self.name


def compare(order: MatrixOrder, u, v) -> int:
    return order.compare(u, v)


def sign(order: MatrixOrder, v) -> int:
    return order.sign(v)


def is_term_order(order: MatrixOrder) -> bool:
    return order.is_term_order()


def weight_refine(order: MatrixOrder, w) -> MatrixOrder:
    """Compare by ``<w, .>`` first and break ties with ``order``.

    Rational weights are scaled to a positive integer multiple.  The
    result may be rank deficient as a matrix; that only matters for
    validation, not for comparisons.
    """
    if len(w) != order.nvars:
        raise ArityError("weight arity does not match the order")
    w = scale_to_integers(w)
    return MatrixOrder((w,) + order.rows, name=f"weight[{','.join(map(str, w))}]:{order.name}")


def lex(n: int) -> MatrixOrder:
    return MatrixOrder(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), "lex")


def degrevlex(n: int) -> MatrixOrder:
    rows = [(1,) * n]
    for i in range(n - 1, 0, -1):
        rows.append(tuple(-int(j == i) for j in range(n)))
    return MatrixOrder(tuple(rows), "degrevlex")


def _knapsack_rows(nx: int, first: int):
    # ring t, x1..xn; first row +-e_t, then x-degree and revlex among the x's
    # (x1 smallest), which makes the target a term order
    size = nx + 1
    rows = [tuple([first] + [0] * nx), tuple([0] + [1] * nx)]
    for i in range(1, nx):
        rows.append(tuple(-int(j == i) for j in range(size)))
    return tuple(rows)


def knapsack_source(nx: int) -> MatrixOrder:
    return MatrixOrder(_knapsack_rows(nx, -1), "knapsack-source")


def knapsack_target(nx: int) -> MatrixOrder:
    return MatrixOrder(_knapsack_rows(nx, 1), "knapsack-target")


def named_order(kind: str, n: int) -> MatrixOrder:
    """Standard orders on ``n`` variables.

    For the knapsack orders ``n`` counts all variables including ``t``.
    """
    if n < 1:
        raise InvalidOrder("need at least one variable")
    if kind == "lex":
        return lex(n)
    if kind == "degrevlex":
        return degrevlex(n)
    if kind in ("knapsack-source", "sigma"):
        return knapsack_source(n - 1) if n > 1 else _bad_knapsack()
    if kind in ("knapsack-target", "tau"):
        return knapsack_target(n - 1) if n > 1 else _bad_knapsack()
    raise InvalidOrder(f"unknown order kind {kind!r}")


def _bad_knapsack():
    raise InvalidOrder("knapsack orders need t and at least one x variable")


_INT_LIST = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*$")


def _int_list(text):
    m = _INT_LIST.match(text)
    if not m:
        raise ParseError(f"malformed integer vector {text.strip()!r}")
    return tuple(int(x) for x in m.group(1).split(","))


def parse_order(text: str, n: int) -> MatrixOrder:
    """Parse ``lex``, ``degrevlex``, ``matrix[[..],[..]]`` or ``weight[..]:<base>``."""
    text = text.strip()
    if text.startswith("weight"):
        head, sep, base = text[len("weight"):].partition(":")
        if not sep:
            raise ParseError("weight order needs a base order after ':'")
        w = _int_list(head)
        if len(w) != n:
            raise ArityError(f"weight has {len(w)} entries, ring has {n} variables")
        return weight_refine(parse_order(base, n), w)
    if text.startswith("matrix"):
        body = text[len("matrix"):].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError(f"malformed matrix literal {body!r}")
        inner = body[1:-1]
        rows = [_int_list(r + "]") for r in re.findall(r"\[[^\[\]]*", inner)]
        if not rows:
            raise ParseError("empty matrix literal")
        if any(len(r) != n for r in rows):
            raise ArityError(f"matrix rows must have {n} entries")
        return MatrixOrder(tuple(rows), text)
    return named_order(text, n)


def format_order(order: MatrixOrder) -> str:
    return "matrix[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in order.rows) + "]"
