"""Buchberger's algorithm and marked reduced Groebner bases."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import ArityError, EmptyIdeal, InconsistentMarkings, NotATermOrder
from .orders import MatrixOrder
from .poly import (
    DEFAULT_STEP_CAP,
    MarkedPolynomial,
    Polynomial,
    divides,
    mono_lcm,
    normal_form,
)


@dataclass(frozen=True, eq=False)
class MarkedBasis:
    """A set of marked polynomials, optionally tagged with the order that marked them.

    Equality is set equality of the marked members; the tag is ignored.
    """

    members: tuple
    order: Optional[MatrixOrder] = None

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        if not isinstance(other, MarkedBasis):
            return NotImplemented
        return frozenset(self.members) == frozenset(other.members)

    def __hash__(self):
        return hash(frozenset(self.members))

    @property
    def nvars(self):
        return self.members[0].nvars

    def bodies(self):
        return [g.body for g in self.members]

    def marked_monomials(self):
        return {g.marked for g in self.members}

    def boundary(self):
        """The union of the bounding vectors of all members."""
        out = set()
        for g in self.members:
            out |= g.boundary()
        return out

    def sorted(self, order: Optional[MatrixOrder] = None):
        """Members ordered by marked monomial, largest first."""
        order = order or self.order
        key = order.key if order is not None else (lambda m: (sum(m), m))
        return sorted(self.members, key=lambda g: key(g.marked), reverse=True)

    def with_order(self, order):
        return MarkedBasis(self.members, order)


def s_polynomial(f: MarkedPolynomial, g: MarkedPolynomial) -> Polynomial:
    if f.nvars != g.nvars:
        raise ArityError("S-polynomial of polynomials in different rings")
    L = mono_lcm(f.marked, g.marked)
    a = f.body.mul_term(1 / f.lead_coeff, tuple(x - y for x, y in zip(L, f.marked)))
    b = g.body.mul_term(1 / g.lead_coeff, tuple(x - y for x, y in zip(L, g.marked)))
    return a - b


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(
    gens: Iterable[Polynomial],
    order: MatrixOrder,
    step_cap: int = DEFAULT_STEP_CAP,
    group_order: bool = False,
    chain_criterion: bool = True,
    degree_first: bool = False,
) -> MarkedBasis:
    """Marked reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed smallest lcm first under ``order`` (with
    ``degree_first``, by total degree of the lcm first and then by
    ``order``); pairs with coprime marked monomials are skipped.  With
    ``chain_criterion`` the pair set is maintained by the Gebauer-Moeller
    update, which also retires members made redundant by newer ones.  Orders
    that are not term orders need ``group_order=True``; every reduction then
    runs under ``step_cap``.
    """
    polys = [f for f in gens if f]
    if not polys:
        raise EmptyIdeal("no nonzero generators")
    n = order.nvars
    if any(f.nvars != n for f in polys):
        raise ArityError("generator and order arities differ")
    if not group_order and not order.is_term_order():
        raise NotATermOrder(f"{order.name} is not a term order; pass group_order=True")

    basis: list = []  # every element ever added, by index
    active: list = []  # indices whose markings are not divisible by a newer one
    pairs: dict = {}  # (i, j) -> selection key

    def pair_key(i, j):
        L = mono_lcm(basis[i].marked, basis[j].marked)
        return (sum(L) if degree_first else 0, order.key(L), i, j)

    def insert(h):
        k = len(basis)
        basis.append(MarkedPolynomial.by_order(h, order).monic())
        if chain_criterion:
            _gm_update(basis, active, pairs, k, pair_key)
        else:
            for i in active:
                if not _coprime(basis[i].marked, basis[k].marked):
                    pairs[(i, k)] = pair_key(i, k)
            active.append(k)

    for f in polys:
        r = normal_form(f, [basis[i] for i in active], order, step_cap)
        if r:
            insert(r)

    while pairs:
        i, j = min(pairs, key=pairs.__getitem__)
        del pairs[(i, j)]
        reducers = [basis[k] for k in active]
        r = normal_form(s_polynomial(basis[i], basis[j]), reducers, order, step_cap)
        if r:
            insert(r)

    return minimal_reduced([basis[k] for k in active], order, step_cap)


def _gm_update(basis, active, pairs, k, pair_key):
    h = basis[k].marked
    lcms = {g: mono_lcm(basis[g].marked, h) for g in active}
    # new pairs (g, h): drop those whose lcm is a proper multiple of another's
    cand = list(active)
    kept = []
    while cand:
        g1 = cand.pop(0)
        L1 = lcms[g1]
        if _coprime(basis[g1].marked, h) or not any(
            divides(lcms[g2], L1) for g2 in cand + kept
        ):
            kept.append(g1)
    new = [g for g in kept if not _coprime(basis[g].marked, h)]
    # old pairs made redundant by h (chain criterion)
    for (i, j) in list(pairs):
        L = mono_lcm(basis[i].marked, basis[j].marked)
        if divides(h, L) and lcms.get(i, mono_lcm(basis[i].marked, h)) != L and lcms.get(
            j, mono_lcm(basis[j].marked, h)
        ) != L:
            del pairs[(i, j)]
    for g in new:
        pairs[(g, k)] = pair_key(g, k)
    active[:] = [g for g in active if not divides(h, basis[g].marked)] + [k]


def minimal_reduced(members: Sequence[MarkedPolynomial], order, step_cap=DEFAULT_STEP_CAP):
    basis = autoreduce(members, step_cap=step_cap, order=order)
    return MarkedBasis(tuple(basis.sorted(order)), order)


def autoreduce(
    members: Sequence[MarkedPolynomial],
    step_cap: int = DEFAULT_STEP_CAP,
    order: Optional[MatrixOrder] = None,
) -> MarkedBasis:
    """Drop redundant members and reduce every tail modulo the other markings.

    Markings are preserved on the survivors and made monic.  ``order`` only
    steers which term is reduced first; the result depends on the markings.
    """
    members = list(members)
    marks = [g.marked for g in members]
    if len(set(marks)) != len(marks):
        # identical markings: keep the first, the rest reduce to it
        seen = set()
        members = [g for g in members if not (g.marked in seen or seen.add(g.marked))]
    keep = [
        g
        for g in members
        if not any(h.marked != g.marked and divides(h.marked, g.marked) for h in members)
    ]
    out = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1:]
        tail = normal_form(g.tail(), others, order, step_cap)
        if g.marked in tail.terms:
            raise InconsistentMarkings(
                f"reducing the tail of {g.body!r} reproduced its marked term"
            )
        body = tail + Polynomial._raw(g.nvars, {g.marked: g.lead_coeff})
        out.append(MarkedPolynomial(body, g.marked).monic())
    return MarkedBasis(tuple(out), order)


def cone_contains(basis: MarkedBasis, w: Sequence, require_nonneg: bool = True) -> bool:
    """``<w, v> >= 0`` for every bounding vector ``v`` (and ``w >= 0`` if asked)."""
    if len(w) != basis.nvars:
        raise ArityError("weight arity does not match the basis")
    if require_nonneg and any(x < 0 for x in w):
        return False
    return all(sum(a * b for a, b in zip(w, v)) >= 0 for v in basis.boundary())


def is_reduced(basis: MarkedBasis) -> bool:
    for g in basis:
        if g.lead_coeff != 1:
            return False
        for h in basis:
            if h is not g and any(divides(g.marked, m) for m in h.body.terms):
                return False
    return True


def failing_s_pair(basis: MarkedBasis, step_cap: int = DEFAULT_STEP_CAP):
    """First pair of members whose S-polynomial does not reduce to zero, or None."""
    members = list(basis)
    for f, g in combinations(members, 2):
        if _coprime(f.marked, g.marked):
            continue
        if normal_form(s_polynomial(f, g), members, None, step_cap):
            return f, g
    return None


def is_groebner_basis(
    basis: MarkedBasis,
    order: Optional[MatrixOrder] = None,
    step_cap: int = DEFAULT_STEP_CAP,
) -> bool:
    """S-pair criterion on the markings; with ``order`` the members are re-marked first."""
    if order is not None:
        basis = MarkedBasis(
            tuple(MarkedPolynomial.by_order(g.body, order) for g in basis), order
        )
    return failing_s_pair(basis, step_cap) is None


def mark_all(polys: Iterable[Polynomial], order: MatrixOrder) -> MarkedBasis:
    return MarkedBasis(tuple(MarkedPolynomial.by_order(f, order) for f in polys), order)
