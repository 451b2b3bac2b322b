"""Random instances and independent oracles shared by the test modules.

The oracles here deliberately avoid the package's comparison code: weight
vectors are compared as plain Python tuples and perturbed weights are built
with explicit rational arithmetic.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from gbwalk.orders import MatrixOrder
from gbwalk.poly import Polynomial

COEFFS = [c for c in range(-5, 6) if c]


def random_poly(rng: random.Random, n: int, maxdeg: int = 4, maxterms: int = 4) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(2, maxterms)):
        d = rng.randint(0, maxdeg)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        terms[tuple(e)] = rng.choice(COEFFS)
    return Polynomial(n, terms)


def random_ideal(rng: random.Random, max_vars: int = 3, max_gens: int = 3):
    """(n, generators) with n <= 3 variables, <= 3 generators, degree <= 4."""
    n = rng.randint(1, max_vars)
    gens = [random_poly(rng, n) for _ in range(rng.randint(1, max_gens))]
    gens = [g for g in gens if g]
    return n, gens or [Polynomial.variable(n, 0)]


def ideal_corpus(seed: int, count: int):
    rng = random.Random(seed)
    return [random_ideal(rng) for _ in range(count)]


def random_full_rank_order(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> MatrixOrder:
    while True:
        rows = tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(n))
        order = MatrixOrder(rows, "random")
        if order.is_full_rank():
            return order


# --- plain-tuple order arithmetic ------------------------------------------

def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def lex_sign(rows, v):
    """Sign of ``v`` under a matrix order, via tuple comparison against 0."""
    t = tuple(dot(r, v) for r in rows)
    z = (0,) * len(t)
    return (t > z) - (t < z)


def in_cone(v, o1, o2):
    return lex_sign(o1.rows, v) > 0 and lex_sign(o2.rows, v) < 0


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def explicit_weight(rows, eps):
    """``row_1 + eps row_2 + eps^2 row_3 + ...`` in exact rationals."""
    out = [Fraction(0)] * len(rows[0])
    s = Fraction(1)
    for r in rows:
        out = [a + s * b for a, b in zip(out, r)]
        s *= eps
    return tuple(out)


def halving(condition, start=Fraction(1), limit=200):
    """Largest ``start / 2^k`` (k < limit) satisfying ``condition``, else None."""
    e = Fraction(start)
    for _ in range(limit):
        if condition(e):
            return e
        e /= 2
    return None


def explicit_crossing_sign(u, v, o1, o2):
    """Sign of ``t_u - t_v`` on an explicit perturbed line, or None if no
    perturbation was found.

    First ``delta`` is chosen so that ``omega_delta`` reproduces the source
    order's signs on ``u``, ``v`` and on the vectors
    ``<tau_i,u> v - <tau_i,v> u``.  Then ``eps`` is chosen so that
    ``tau_eps`` is negative on ``u`` and ``v`` and the sign of
    ``sum_i eps^(i-1) <omega_delta, <tau_i,u> v - <tau_i,v> u>`` is that of
    its first nonzero coefficient.
    """
    M = [
        tuple(dot(t, u) * y - dot(t, v) * x for x, y in zip(u, v))
        for t in o2.rows
    ]
    checks = [u, v] + M

    def good_delta(d):
        w = explicit_weight(o1.rows, d)
        return all((dot(w, m) > 0) - (dot(w, m) < 0) == lex_sign(o1.rows, m) for m in checks)

    delta = halving(good_delta)
    if delta is None:
        return None
    w = explicit_weight(o1.rows, delta)
    coeffs = [dot(w, m) for m in M]
    target_sign = next(((c > 0) - (c < 0) for c in coeffs if c), 0)

    def good_eps(e):
        t = explicit_weight(o2.rows, e)
        if not (dot(t, u) < 0 and dot(t, v) < 0):
            return False
        s = sum(c * e**i for i, c in enumerate(coeffs))
        return (s > 0) - (s < 0) == target_sign

    eps = halving(good_eps)
    if eps is None:
        return None
    t = explicit_weight(o2.rows, eps)
    au, bu = dot(w, u), dot(t, u)
    av, bv = dot(w, v), dot(t, v)
    tu = au / (au - bu)
    tv = av / (av - bv)
    return (tu > tv) - (tu < tv)


def knapsack_dp(a, bound):
    """reach[b] is True iff ``sum a_i x_i = b`` has a non-negative solution."""
    reach = [False] * (bound + 1)
    reach[0] = True
    for b in range(1, bound + 1):
        reach[b] = any(b >= ai and reach[b - ai] for ai in a)
    return reach
