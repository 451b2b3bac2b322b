"""Knapsack feasibility through toric ideals.

For positive integers ``a_1..a_n`` the ideal ``<x_i - t^a_i>`` lives in
``Q[t, x_1..x_n]``.  Its generators are already a Groebner basis for the
source order (first weight ``-t``); walking to the target order (first
weight ``+t``) yields a test set: the normal form of ``t^b`` is the monomial
``t^s x^y`` with ``s + sum a_i y_i = b`` and ``s`` as small as possible.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .errors import NonMonomialNormalForm
from .groebner import MarkedBasis
from .orders import knapsack_source, knapsack_target
from .poly import DEFAULT_STEP_CAP, MarkedPolynomial, Polynomial, normal_form
from .walk import WalkOptions, WalkTrace, generic_walk


@dataclass(frozen=True)
class KnapsackInstance:
    coefficients: tuple

    def __post_init__(self):
        a = tuple(int(x) for x in self.coefficients)
        if not a:
            raise ValueError("a knapsack instance needs at least one coefficient")
        if any(x < 1 for x in a):
            raise ValueError(f"coefficients must be positive integers, got {a}")
        object.__setattr__(self, "coefficients", a)

    @property
    def n(self):
        return len(self.coefficients)

    @property
    def nvars(self):
        return self.n + 1

    def variable_names(self):
        return ("t",) + tuple(f"x{i + 1}" for i in range(self.n))

    @classmethod
    def parse(cls, text: str) -> "KnapsackInstance":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if len(lines) != 1:
            raise ValueError("instance file must hold exactly one line of coefficients")
        return cls(tuple(int(tok) for tok in lines[0].split()))


@dataclass(frozen=True)
class FeasibilityResult:
    """Exponents of the normal form of ``t^b``: slack ``t`` and solution ``x``."""

    b: int
    t: int
    x: tuple

    @property
    def feasible(self):
        return self.t == 0

    def line(self):
        if self.feasible:
            return "FEASIBLE " + " ".join(map(str, self.x))
        return f"INFEASIBLE {self.t}"


def knapsack_ideal(inst: KnapsackInstance):
    n1 = inst.nvars
    out = []
    for i, a in enumerate(inst.coefficients, 1):
        x = [0] * n1
        x[i] = 1
        t = [0] * n1
        t[0] = a
        out.append(Polynomial(n1, {tuple(x): 1, tuple(t): -1}))
    return out


def sigma_tau_orders(n: int):
    """(source, target) orders for ``n`` knapsack coefficients."""
    if n < 1:
        raise ValueError("need at least one coefficient")
    return knapsack_source(n), knapsack_target(n)


def source_basis(inst: KnapsackInstance) -> MarkedBasis:
    source, _ = sigma_tau_orders(inst.n)
    members = []
    for i, f in enumerate(knapsack_ideal(inst), 1):
        x = tuple(int(j == i) for j in range(inst.nvars))
        members.append(MarkedPolynomial(f, x))
    return MarkedBasis(tuple(members), source)


def compute_test_set(inst: KnapsackInstance, opts: Optional[WalkOptions] = None):
    """Walk from the generators to the target-order basis; returns ``(basis, trace)``."""
    opts = replace(opts or WalkOptions(), group_order=True)
    source, target = sigma_tau_orders(inst.n)
    return generic_walk(source_basis(inst), source, target, opts)


def solve_feasibility(
    test_set: MarkedBasis,
    inst: KnapsackInstance,
    b: int,
    step_cap: int = DEFAULT_STEP_CAP,
) -> FeasibilityResult:
    if b < 0:
        raise ValueError("right-hand side must be non-negative")
    start = [0] * inst.nvars
    start[0] = b
    _, target = sigma_tau_orders(inst.n)
    nf = normal_form(Polynomial.monomial(start), list(test_set), target, step_cap)
    if len(nf) != 1:
        raise NonMonomialNormalForm(f"normal form of t^{b} has {len(nf)} terms")
    (mono, coeff), = nf.terms.items()
    if coeff != 1:
        raise NonMonomialNormalForm(f"normal form of t^{b} has coefficient {coeff}")
    return FeasibilityResult(b, mono[0], tuple(mono[1:]))


def default_query_bound(inst: KnapsackInstance) -> int:
    return 10 * max(inst.coefficients)


def source_target_sizes(inst: KnapsackInstance, test_set: MarkedBasis, trace: WalkTrace):
    return len(inst.coefficients), len(test_set), trace.total_steps


def format_stats(inst, test_set, trace) -> str:
    gs, gt, k = source_target_sizes(inst, test_set, trace)
    return f"|Gsigma|={gs} |Gtau|={gt} steps={k}"


__all__ = [
    "KnapsackInstance",
    "FeasibilityResult",
    "knapsack_ideal",
    "sigma_tau_orders",
    "source_basis",
    "compute_test_set",
    "solve_feasibility",
    "default_query_bound",
    "format_stats",
]
