"""Groebner basis conversion by walking through the Groebner fan.

:func:`generic_walk` tracks a formal line between infinitesimally perturbed
weight vectors of the source and target orders.  It never builds those
vectors: which cone wall is hit first is decided by :func:`facet_cmp`,
which compares two bounding vectors using only the rows of the two order
matrices.  :func:`classic_walk` follows an explicit rational line and is
kept as a baseline.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import (
    ArityError,
    DegenerateCrossing,
    GroebnerError,
    InvalidInputBasis,
    NotATermOrder,
    W0NotInCone,
)
from .groebner import (
    MarkedBasis,
    autoreduce,
    buchberger,
    cone_contains,
    failing_s_pair,
    is_reduced,
)
from .orders import MatrixOrder, weight_refine
from .poly import DEFAULT_STEP_CAP, MarkedPolynomial, Polynomial, normal_form

log = logging.getLogger(__name__)


class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign):
        self.sign = sign

    def __repr__(self):
        return "-inf" if self.sign < 0 else "+inf"


NEG_INF = _Infinity(-1)
POS_INF = _Infinity(1)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def primitive(v) -> tuple:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


@dataclass
class WalkOptions:
    """Knobs shared by both walks.

    ``truncate=(p, q)`` compares with only the first ``p`` rows of the
    source order and the first ``q`` rows of the target order.
    ``group_order`` allows orders that are not term orders (every reduction
    then relies on ``step_cap`` to stop).
    """

    truncate: Optional[tuple] = None
    step_cap: int = DEFAULT_STEP_CAP
    group_order: bool = False
    validate: bool = True
    max_steps: int = 100_000

    def depths(self, o1, o2):
        if self.truncate is None:
            return len(o1.rows), len(o2.rows)
        p, q = self.truncate
        if not (1 <= p <= len(o1.rows) and 1 <= q <= len(o2.rows)):
            raise ValueError(f"truncation depths {self.truncate} out of range")
        return p, q


@dataclass
class WalkStep:
    facet: tuple
    facet_generators: int
    facet_basis_size: int
    basis_size: int
    t: Optional[Fraction] = None
    basis: Optional[MarkedBasis] = field(default=None, repr=False, compare=False)


@dataclass
class WalkTrace:
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def facets(self):
        return [s.facet for s in self.steps]

    @property
    def total_steps(self):
        return len(self.steps)

    def facets_text(self):
        return " ".join("(" + ",".join(str(x) for x in s.facet) + ")" for s in self.steps)

    def to_text(self):
        lines = []
        for k, s in enumerate(self.steps, 1):
            vec = "(" + ",".join(str(x) for x in s.facet) + ")"
            extra = f" t={s.t}" if s.t is not None else ""
            lines.append(
                f"step {k}: facet {vec}{extra} generators={s.facet_generators} "
                f"|H|={s.facet_basis_size} |G|={s.basis_size}"
            )
        lines.append(f"total steps: {self.total_steps}")
        return "\n".join(lines)

    def to_json(self):
        steps = []
        for k, s in enumerate(self.steps, 1):
            steps.append(
                {
                    "step": k,
                    "facet": [str(x) if isinstance(x, Fraction) else x for x in s.facet],
                    "t": None if s.t is None else str(s.t),
                    "facet_generators": s.facet_generators,
                    "facet_basis_size": s.facet_basis_size,
                    "basis_size": s.basis_size,
                }
            )
        return {"steps": steps, "total_steps": self.total_steps}

    def dumps(self):
        return json.dumps(self.to_json())


# ---------------------------------------------------------------------------
# the facet preorder

def facet_cmp(u, v, o1: MatrixOrder, o2: MatrixOrder, p=None, q=None) -> int:
    """Compare the crossing times of two vectors of the crossing cone.

    Returns -1, 0 or 1.  For each of the first ``q`` target rows ``tau`` the
    vectors ``<tau,u> v`` and ``<tau,v> u`` are compared under the first
    ``p`` source rows; the first difference decides.  At full depth 0 means
    ``u`` and ``v`` are positive multiples of each other.
    """
    n = o1.nvars
    if len(u) != n or len(v) != n or o2.nvars != n:
        raise ArityError("facet_cmp arity mismatch")
    rows1 = o1.rows if p is None else o1.rows[:p]
    rows2 = o2.rows if q is None else o2.rows[:q]
    wu = [_dot(r, u) for r in rows1]
    wv = [_dot(r, v) for r in rows1]
    for tau in rows2:
        a = _dot(tau, u)
        b = _dot(tau, v)
        for x, y in zip(wv, wu):
            left, right = a * x, b * y
            if left != right:
                return -1 if left < right else 1
    return 0


def in_crossing_cone(v, o1: MatrixOrder, o2: MatrixOrder) -> bool:
    """``0 < v`` under the source order and ``v < 0`` under the target order."""
    return o1.sign(v) > 0 and o2.sign(v) < 0


def _cursor_cmp(w, v, o1, o2, p, q):
    if w is NEG_INF:
        return -1
    if w is POS_INF:
        return 1
    return facet_cmp(w, v, o1, o2, p, q)


def compute_last_w(
    basis: MarkedBasis,
    w,
    o1: MatrixOrder,
    o2: MatrixOrder,
    opts: Optional[WalkOptions] = None,
    seen: Optional[set] = None,
):
    """Smallest facet vector of ``basis`` beyond the cursor ``w``, or ``POS_INF``.

    In truncated mode a vector tied with ``w`` still qualifies if it is not
    in ``seen``.
    """
    opts = opts or WalkOptions()
    if not len(basis):
        raise InvalidInputBasis("empty basis")
    p, q = opts.depths(o1, o2)
    truncated = opts.truncate is not None
    seen = seen or set()
    V = {primitive(v) for v in basis.boundary() if in_crossing_cone(v, o1, o2)}
    best = None
    for v in sorted(V):
        c = _cursor_cmp(w, v, o1, o2, p, q)
        if not (c < 0 or (c == 0 and truncated and v not in seen)):
            continue
        if best is None or facet_cmp(v, best, o1, o2, p, q) < 0:
            best = v
    return POS_INF if best is None else best


def facet_initial_forms(
    basis: MarkedBasis, w, o1: MatrixOrder, o2: MatrixOrder, opts: Optional[WalkOptions] = None
):
    """Initial forms at the facet ``w``: the marked term plus every term whose
    difference with it is tied with ``w``."""
    opts = opts or WalkOptions()
    p, q = opts.depths(o1, o2)
    out = []
    for g in basis:
        u = g.marked
        keep = {}
        for v, c in g.body.terms.items():
            if v == u:
                keep[v] = c
                continue
            d = tuple(a - b for a, b in zip(u, v))
            if in_crossing_cone(d, o1, o2) and facet_cmp(d, w, o1, o2, p, q) == 0:
                keep[v] = c
        out.append(MarkedPolynomial(Polynomial._raw(g.nvars, keep), u))
    return out


def lift(H: Sequence[MarkedPolynomial], basis: MarkedBasis, step_cap: int = DEFAULT_STEP_CAP):
    """``f - (f mod basis)`` for each ``f`` in ``H``, keeping ``f``'s marking."""
    members = list(basis)
    out = []
    for f in H:
        r = normal_form(f.body, members, None, step_cap)
        lifted = f.body - r
        if f.marked not in lifted.terms:
            raise DegenerateCrossing(
                f"lifting {f.body!r} cancelled its marked term; the crossed face is not a facet"
            )
        out.append(MarkedPolynomial(lifted, f.marked))
    return out


def crossing_consistent(members, w, o1: MatrixOrder, o2: MatrixOrder) -> bool:
    """Do the markings of ``members`` hold at the point where the line crosses ``w``?

    A bounding vector ``v`` is nonnegative there iff it is positive under both
    orders, or lies in the crossing cone at or beyond ``w``, or its negative
    lies in the crossing cone at or before ``w``.
    """
    for g in members:
        for v in g.boundary():
            s1, s2 = o1.sign(v), o2.sign(v)
            if s1 > 0 and s2 > 0:
                continue
            if s1 > 0 and facet_cmp(w, v, o1, o2) <= 0:
                continue
            if s2 > 0 and facet_cmp(tuple(-x for x in v), w, o1, o2) <= 0:
                continue
            return False
    return True


def validate_start(basis: MarkedBasis, o1: MatrixOrder, opts: WalkOptions):
    if not len(basis):
        raise InvalidInputBasis("empty basis")
    if not o1.is_term_order() and not opts.group_order:
        raise NotATermOrder(f"source order {o1.name} is not a term order; enable group-order mode")
    for g in basis:
        if not g.agrees_with(o1):
            err = InvalidInputBasis(f"marking of {g.body!r} is not its leading term under {o1.name}")
            err.culprits = [g]
            raise err
    if not is_reduced(basis):
        raise InvalidInputBasis("input basis is not reduced")
    bad = failing_s_pair(basis, opts.step_cap)
    if bad is not None:
        err = InvalidInputBasis(
            f"S-pair of {bad[0].body!r} and {bad[1].body!r} does not reduce to zero"
        )
        err.culprits = list(bad)
        raise err


def _facet_basis(gens, o2, opts):
    group = opts.group_order or not o2.is_term_order()
    return buchberger([g.body for g in gens], o2, opts.step_cap, group_order=group)


def generic_walk(
    basis: MarkedBasis,
    o1: MatrixOrder,
    o2: MatrixOrder,
    opts: Optional[WalkOptions] = None,
):
    """Convert the marked reduced basis over ``o1`` into the one over ``o2``.

    Returns ``(basis, trace)``.
    """
    opts = opts or WalkOptions()
    o1.require_full_rank()
    o2.require_full_rank()
    if o1.nvars != o2.nvars:
        raise ArityError("source and target orders have different arities")
    if opts.validate:
        validate_start(basis, o1, opts)
    elif not len(basis):
        raise InvalidInputBasis("empty basis")
    p, q = opts.depths(o1, o2)
    truncated = opts.truncate is not None

    trace = WalkTrace()
    G = basis
    w = NEG_INF
    seen: set = set()
    while True:
        w_next = compute_last_w(G, w, o1, o2, opts, seen)
        if w_next is POS_INF:
            break
        c = _cursor_cmp(w, w_next, o1, o2, p, q)
        if c > 0 or (c == 0 and not truncated):
            raise GroebnerError(f"facet cursor failed to increase: {w} -> {w_next}")
        if len(trace) >= opts.max_steps:
            raise GroebnerError(f"walk exceeded {opts.max_steps} steps")
        w = w_next
        seen.add(w)
        gens = facet_initial_forms(G, w, o1, o2, opts)
        H = _facet_basis(gens, o2, opts)
        lifted = lift(H.members, G, opts.step_cap)
        if not crossing_consistent(lifted, w, o1, o2):
            raise DegenerateCrossing(f"lifted markings at {w} do not fit the crossing point")
        G = autoreduce(lifted, opts.step_cap)
        step = WalkStep(w, len(gens), len(H), len(G), basis=G)
        trace.steps.append(step)
        log.debug("facet %s: |H|=%d |G|=%d", w, len(H), len(G))

    if truncated and not (
        all(g.agrees_with(o2) for g in G) and failing_s_pair(G, opts.step_cap) is None
    ):
        raise DegenerateCrossing(
            f"truncated walk with depths {opts.truncate} did not reach a Groebner basis over {o2.name}"
        )
    return MarkedBasis(tuple(G.sorted(o2)), o2), trace


# ---------------------------------------------------------------------------
# explicit perturbations and the classical walk

def perturbed_weight(order: MatrixOrder, eps) -> tuple:
    """``row_1 + eps row_2 + eps^2 row_3 + ...`` with exact rationals."""
    eps = Fraction(eps)
    out = [Fraction(0)] * order.nvars
    scale = Fraction(1)
    for r in order.rows:
        out = [a + scale * b for a, b in zip(out, r)]
        scale *= eps
    return tuple(out)


def cone_interior_point(basis: MarkedBasis, order: MatrixOrder, positive: bool = True) -> tuple:
    """A strictly positive integer weight in the interior of the basis' cone.

    Halves ``eps`` until ``perturbed_weight(order, eps)`` pairs positively
    with every bounding vector (and every unit vector when ``positive``).
    Requires the markings to agree with ``order``.
    """
    n = order.nvars
    vecs = list(basis.boundary())
    if positive:
        vecs += [tuple(int(i == j) for j in range(n)) for i in range(n)]
    if any(order.sign(v) <= 0 for v in vecs):
        raise ValueError("markings (or unit vectors) are not positive under the order")
    eps = Fraction(1)
    while True:
        w = perturbed_weight(order, eps)
        if all(_dot(w, v) > 0 for v in vecs):
            den = 1
            for x in w:
                den = den * x.denominator // gcd(den, x.denominator)
            return primitive(tuple(int(x * den) for x in w))
        eps /= 2


def _initial_at(basis: MarkedBasis, weight):
    out = []
    for g in basis:
        u = g.marked
        wu = _dot(weight, u)
        keep = {v: c for v, c in g.body.terms.items() if _dot(weight, v) == wu}
        out.append(MarkedPolynomial(Polynomial._raw(g.nvars, keep), u))
    return out


def classic_walk(
    basis: MarkedBasis,
    o1: MatrixOrder,
    o2: MatrixOrder,
    w0: Sequence,
    t0: Sequence,
    opts: Optional[WalkOptions] = None,
):
    """Walk along ``(1 - t) w0 + t t0`` from the ``o1`` cone to the ``o2`` cone.

    ``w0`` must lie in the cone of ``basis`` and ``t0`` in the target cone;
    the second is the caller's responsibility.  Ties on the target side are
    broken by ``o2`` refined by ``t0``.
    """
    opts = opts or WalkOptions()
    n = o1.nvars
    w0 = tuple(Fraction(x) for x in w0)
    t0 = tuple(Fraction(x) for x in t0)
    if len(w0) != n or len(t0) != n or o2.nvars != n:
        raise ArityError("weight/order arity mismatch")
    if opts.validate:
        validate_start(basis, o1, opts)
    if not cone_contains(basis, w0, require_nonneg=True):
        raise W0NotInCone(f"w0={tuple(map(str, w0))} is not in the cone of the input basis")
    if not any(t0):
        raise ValueError("t0 must be nonzero")
    target = weight_refine(o2, t0)

    trace = WalkTrace()
    G = basis
    t = None
    while True:
        best = None
        for v in G.boundary():
            a, b = _dot(w0, v), _dot(t0, v)
            if a >= 0 and b < 0:
                tv = a / (a - b)
                if (t is None or tv >= t) and (best is None or tv < best):
                    best = tv
        if best is None:
            if all(g.agrees_with(o2) for g in G):
                break
            # t0 sits on a wall the markings still see; finish at t = 1
            best = Fraction(1)
        if len(trace) >= opts.max_steps:
            raise GroebnerError(f"walk exceeded {opts.max_steps} steps")
        if t is not None and best == t:
            raise GroebnerError(f"classic walk stalled at t={t}")
        t = best
        weight = tuple((1 - t) * a + t * b for a, b in zip(w0, t0))
        gens = _initial_at(G, weight)
        H = _facet_basis(gens, target, opts)
        G = autoreduce(lift(H.members, G, opts.step_cap), opts.step_cap)
        trace.steps.append(WalkStep(weight, len(gens), len(H), len(G), t=t, basis=G))
        log.debug("t=%s weight=%s |G|=%d", t, weight, len(G))
        if t == 1:
            break

    return MarkedBasis(tuple(G.sorted(o2)), o2), trace
