from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spstring.construct import (
    ResidualComponent,
    construct_representation,
    longest_pole_path,
    order_residuals,
    plan_heavy_cycle,
)
from spstring.corpus import cycle, sp_all, sp_light, sp_random, theta
from spstring.errors import NestingViolation, NotBiconnected, NotSeriesParallel, TooHeavy, TransitiveEdgesPresent
from spstring.geometry import ML, crossings, verify
from spstring.graph import Graph, connected_components
from spstring.heaviness import decide
from spstring.oracle import fig5_fixture, oracle_heaviness, oracle_longest_path


def check_output(g: Graph, rep) -> None:
    r = verify(g, rep)
    assert r.ok, r.lines()
    assert len({c.anchor_x for c in rep.curves}) == g.n
    assert len({c.depth_y for c in rep.curves}) == g.n


# ---------------------------------------------------------------------------
# examples
# ---------------------------------------------------------------------------


def test_triangle():
    g = cycle(3)
    check_output(g, construct_representation(g))


def test_cycle_12_has_12_crossings():
    g = cycle(12)
    rep = construct_representation(g)
    check_output(g, rep)
    assert len(rep) == 12 and sum(crossings(rep).values()) == 12


def test_fixture_needs_mirrored_curves():
    g = fig5_fixture()
    rep = construct_representation(g, check_each=True)
    check_output(g, rep)
    assert rep.uses_mirrored()
    assert not verify(g, rep, mode="Lonly").shape_ok


def test_theta_442():
    g = theta(4, 4, 2)
    check_output(g, construct_representation(g, check_each=True))


def test_too_heavy_reports_pair():
    with pytest.raises(TooHeavy) as info:
        construct_representation(theta(4, 4, 4))
    assert set(info.value.poles) == {0, 1}


def test_out_of_class_inputs():
    with pytest.raises(NotBiconnected):
        construct_representation(Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
    with pytest.raises(NotSeriesParallel):
        construct_representation(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
    with pytest.raises(TransitiveEdgesPresent) as info:
        construct_representation(Graph.from_edges(5, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]))
    assert list(info.value.edges) == [(0, 1)]


# ---------------------------------------------------------------------------
# heavy cycle
# ---------------------------------------------------------------------------


def test_heavy_cycle_uses_two_heaviest_components():
    g = theta(5, 4, 2)
    plan, comps = plan_heavy_cycle(g)
    assert {plan.s, plan.t} == {0, 1}
    assert len(plan.p1) - 1 == 5 and len(plan.p2) - 1 == 4
    assert len(plan.cycle) == 9 and len(set(plan.cycle)) == 9
    assert plan.k == 2


@pytest.mark.parametrize("seed", range(15))
def test_longest_pole_path_matches_brute_force(seed):
    g = sp_random(12, seed, p_parallel=0.7)
    plan, comps = plan_heavy_cycle(g)
    for comp in comps:
        path = longest_pole_path(g, comp, plan.s, plan.t)
        inside = set(comp) | {plan.s, plan.t}
        edges = set(g.induced(inside))
        assert len(path) - 1 == oracle_longest_path(g, plan.s, plan.t, edges=edges)
        assert path[0] == plan.s and path[-1] == plan.t
        assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


@pytest.mark.parametrize("seed", range(15))
def test_pair_has_most_heavy_components(seed):
    g = sp_random(13, seed, p_parallel=0.6)
    if not decide(g).at_most_2_heavy:
        return
    plan, comps = plan_heavy_cycle(g)
    assert plan.k == oracle_heaviness(g).k
    # every vertex off the cycle hangs in a component with exactly two attachments
    on_cycle = set(plan.cycle)
    for comp in connected_components(g, on_cycle):
        attach = {w for v in comp for w in g.adj[v] if w in on_cycle}
        assert len(attach) == 2


def test_crossing_intervals_rejected():
    p = list(range(10, 20))
    a = ResidualComponent(frozenset({1}), 11, 14, [1], [1])
    b = ResidualComponent(frozenset({2}), 12, 16, [2], [2])
    with pytest.raises(NestingViolation):
        order_residuals([a, b], [], p)


def test_nested_intervals_ordered_inner_first():
    p = list(range(10, 20))
    outer = ResidualComponent(frozenset({1}), 11, 16, [1], [1])
    inner = ResidualComponent(frozenset({2}), 12, 14, [2], [2])
    at_s = ResidualComponent(frozenset({3}), 0, 13, [3], [3])
    assert order_residuals([outer, inner], [at_s], p) == [inner, outer, at_s]


# ---------------------------------------------------------------------------
# whole corpus
# ---------------------------------------------------------------------------


def test_enumerated_graphs_up_to_9_with_stepwise_checks():
    for g in sp_all(9):
        check_output(g, construct_representation(g, check_each=True))


@settings(max_examples=60, deadline=None)
@given(st.integers(6, 60), st.integers(0, 10**6), st.sampled_from([0.2, 0.5, 0.8]))
def test_random_graphs_built_iff_two_heavy(n, seed, p):
    g = sp_random(n, seed, p)
    ok = decide(g).at_most_2_heavy
    try:
        rep = construct_representation(g, check_each=n <= 25)
    except TooHeavy:
        assert not ok
        return
    assert ok
    check_output(g, rep)


@pytest.mark.parametrize("n, seed", [(300, 0), (300, 1), (2000, 2)])
def test_larger_graphs(n, seed):
    g = sp_light(n, seed)
    assert decide(g).at_most_2_heavy
    check_output(g, construct_representation(g))


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 40), st.integers(0, 10**6))
def test_light_family_builds_with_stepwise_checks(n, seed):
    g = sp_light(n, seed)
    check_output(g, construct_representation(g, check_each=True))


def test_mirrored_curves_present_whenever_cycle_drawn():
    for g in [cycle(5), theta(3, 3, 3)]:
        assert any(c.orientation == ML for c in construct_representation(g).curves)


def test_disjoint_intervals_left_first():
    p = list(range(10, 20))
    right = ResidualComponent(frozenset({1}), 13, 15, [1], [1])
    left = ResidualComponent(frozenset({2}), 10, 12, [2], [2])
    assert order_residuals([right, left], [], p) == [left, right]


def test_output_is_deterministic():
    for g in [fig5_fixture(), sp_light(200, 4), theta(4, 4, 3)]:
        assert construct_representation(g) == construct_representation(g)
