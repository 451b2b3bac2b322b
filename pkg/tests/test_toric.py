import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbwalk.errors import NonMonomialNormalForm
from gbwalk.groebner import MarkedBasis, buchberger, cone_contains, failing_s_pair
from gbwalk.poly import MarkedPolynomial, Polynomial, normal_form
from gbwalk.toric import (
    FeasibilityResult,
    KnapsackInstance,
    compute_test_set,
    default_query_bound,
    format_stats,
    knapsack_ideal,
    sigma_tau_orders,
    solve_feasibility,
    source_basis,
)
from gbwalk.walk import WalkOptions
from corpus import knapsack_dp


def test_instance_validation():
    assert KnapsackInstance((2, 3)).variable_names() == ("t", "x1", "x2")
    assert KnapsackInstance.parse("# comment\n 4 5 6 \n").coefficients == (4, 5, 6)
    for bad in [(), (0, 3), (-1,)]:
        with pytest.raises(ValueError):
            KnapsackInstance(bad)
    with pytest.raises(ValueError):
        KnapsackInstance.parse("1 2\n3\n")


def test_knapsack_ideal_examples():
    assert knapsack_ideal(KnapsackInstance((2, 3))) == [
        Polynomial(3, {(0, 1, 0): 1, (2, 0, 0): -1}),
        Polynomial(3, {(0, 0, 1): 1, (3, 0, 0): -1}),
    ]
    assert knapsack_ideal(KnapsackInstance((1,))) == [Polynomial(2, {(0, 1): 1, (1, 0): -1})]


@pytest.mark.parametrize("a", [(1,), (2, 3), (5, 7, 11), (3, 3, 6, 9)])
def test_generators_are_a_source_basis(a):
    inst = KnapsackInstance(a)
    G = source_basis(inst)
    source, _ = sigma_tau_orders(inst.n)
    assert all(g.agrees_with(source) for g in G)
    assert failing_s_pair(G) is None


def test_orders():
    source, target = sigma_tau_orders(1)
    assert source.rows[0] == (-1, 0) and target.rows[0] == (1, 0)
    assert source.rows[1:] == target.rows[1:]
    assert (source.is_term_order(), target.is_term_order()) == (False, True)
    assert source.is_full_rank() and target.is_full_rank()
    with pytest.raises(ValueError):
        sigma_tau_orders(0)


def test_test_set_examples():
    inst = KnapsackInstance((2, 3))
    G, trace = compute_test_set(inst)
    _, target = sigma_tau_orders(2)
    assert G == buchberger(knapsack_ideal(inst), target)
    assert len(trace) >= 1
    single, _ = compute_test_set(KnapsackInstance((1,)))
    assert single == MarkedBasis((MarkedPolynomial(Polynomial(2, {(1, 0): 1, (0, 1): -1}), (1, 0)),))


def test_source_and_target_cones_differ():
    inst = KnapsackInstance((3, 5))
    source, target = sigma_tau_orders(inst.n)
    G, _ = compute_test_set(inst)
    # the target first row is not in the closed cone of the source basis
    assert not cone_contains(source_basis(inst), target.rows[0], require_nonneg=False)
    assert cone_contains(G, target.rows[0], require_nonneg=False)


def test_feasibility_examples():
    inst = KnapsackInstance((2, 3))
    G, _ = compute_test_set(inst)
    r = solve_feasibility(G, inst, 7)
    assert r.feasible and 2 * r.x[0] + 3 * r.x[1] == 7
    assert r.line() == "FEASIBLE " + " ".join(map(str, r.x))
    r = solve_feasibility(G, inst, 1)
    assert not r.feasible and r.line() == "INFEASIBLE 1"
    assert solve_feasibility(G, inst, 0) == FeasibilityResult(0, 0, (0, 0))
    even = KnapsackInstance((2, 4))
    H, _ = compute_test_set(even)
    r = solve_feasibility(H, even, 3)
    assert not r.feasible and r.t > 0
    with pytest.raises(ValueError):
        solve_feasibility(G, inst, -1)


def test_broken_test_set_is_reported():
    inst = KnapsackInstance((2, 3))
    broken = MarkedBasis((MarkedPolynomial(Polynomial(3, {(1, 0, 0): 1, (0, 1, 0): 1}), (1, 0, 0)),))
    with pytest.raises(NonMonomialNormalForm):
        solve_feasibility(broken, inst, 1)


def test_stats_format():
    inst = KnapsackInstance((2, 3))
    G, trace = compute_test_set(inst)
    assert format_stats(inst, G, trace) == f"|Gsigma|=2 |Gtau|={len(G)} steps={len(trace)}"


def test_caller_options_are_not_mutated():
    opts = WalkOptions()
    compute_test_set(KnapsackInstance((2, 5)), opts)
    assert opts.group_order is False


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=3))
def test_feasibility_matches_dp(a):
    inst = KnapsackInstance(tuple(a))
    G, _ = compute_test_set(inst)
    _, target = sigma_tau_orders(inst.n)
    assert G == buchberger(knapsack_ideal(inst), target)
    bound = default_query_bound(inst)
    reach = knapsack_dp(a, bound)
    best_slack = {}
    for b in range(bound + 1):
        r = solve_feasibility(G, inst, b)
        assert r.t + sum(x * ai for x, ai in zip(r.x, a)) == b
        assert r.feasible == reach[b]
        best_slack[b] = r.t
    # the slack is minimal: no smaller t leaves a representable remainder
    for b, t in best_slack.items():
        assert not any(reach[b - s] for s in range(t))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=3), st.integers(0, 40), st.integers(0, 40))
def test_monomials_reduce_to_monomials(a, e0, e1):
    inst = KnapsackInstance(tuple(a))
    G, _ = compute_test_set(inst)
    _, target = sigma_tau_orders(inst.n)
    mono = [0] * inst.nvars
    mono[0], mono[-1] = e0, e1
    nf = normal_form(Polynomial.monomial(mono), list(G), target)
    assert len(nf) == 1
