from __future__ import annotations

import itertools

import networkx as nx
import pytest

from spstring.corpus import cycle, theta
from spstring.errors import InstanceTooLarge
from spstring.graph import Graph, SeparationPair
from spstring.oracle import (
    FIG5_EDGES,
    fig5_fixture,
    has_k4_subdivision,
    oracle_critical_count,
    oracle_heaviness,
    oracle_longest_path,
)


def test_longest_path_on_cycle():
    g = cycle(9)
    for k in range(1, 9):
        assert oracle_longest_path(g, 0, k) == max(k, 9 - k)
    assert oracle_longest_path(g, 3, 3) == 0


def test_longest_path_edge_subset():
    g = cycle(6)
    assert oracle_longest_path(g, 0, 2, edges={(0, 1), (1, 2)}) == 2
    assert oracle_longest_path(g, 0, 3, edges={(0, 1)}) == -1


def test_longest_path_matches_networkx_simple_paths():
    g = theta(3, 4, 5)
    h = nx.Graph(list(g.edges))
    expected = max(len(p) - 1 for p in nx.all_simple_paths(h, 0, 1))
    assert oracle_longest_path(g, 0, 1) == expected == 5


def test_k4_subdivisions():
    k4 = Graph.from_edges(4, list(itertools.combinations(range(4), 2)))
    assert has_k4_subdivision(k4)
    # subdivide two edges of K4
    sub = Graph.from_edges(6, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 5), (5, 3), (2, 3)])
    assert has_k4_subdivision(sub)
    assert not has_k4_subdivision(theta(2, 2, 2))
    assert not has_k4_subdivision(cycle(7))


def test_size_bounds():
    with pytest.raises(InstanceTooLarge):
        oracle_heaviness(cycle(17))
    with pytest.raises(InstanceTooLarge):
        oracle_longest_path(cycle(17), 0, 1)
    assert oracle_heaviness(cycle(17), max_n=17).k == 2


@pytest.mark.parametrize(
    "lengths, k",
    [((2, 2, 2), 0), ((4, 2, 2), 1), ((4, 4, 2), 2), ((4, 4, 4), 3), ((4, 4, 4, 4), 4), ((3, 3, 3), 1)],
)
def test_theta_heaviness(lengths, k):
    # in theta(3, 3, 3) the pair (pole, far vertex of one path) leaves one heavy side
    w = oracle_heaviness(theta(*lengths), max_n=20)
    assert w.k == k
    if k >= 2:
        assert w.pair == SeparationPair(0, 1)


def test_cycle_heaviness():
    # C8 at opposite vertices: two paths of length 4, both heavy
    assert oracle_heaviness(cycle(8)).k == 2
    assert oracle_heaviness(cycle(7)).k == 1
    assert oracle_heaviness(cycle(5)).k == 0


def test_critical_counts():
    g = theta(4, 4, 2)
    assert oracle_critical_count(g, SeparationPair(0, 1)) == 2


def test_fixture_structure():
    g = fig5_fixture()
    assert g.n == 21 and g.m == len(FIG5_EDGES) == 26
    s, t = g.index_of("s"), g.index_of("t")
    assert (s, t) == (0, 1)
    assert {g.label(v) for v in g.adj[s]} == {"u", "v1", "w1", "x1", "y1"}
    assert g.degree(g.index_of("v3")) == 4 and g.degree(g.index_of("w3")) == 4
    assert not has_k4_subdivision(g, max_n=21)
    w = oracle_heaviness(g, max_n=21)
    assert w.k == 2 and w.pair == SeparationPair(s, t)
    assert oracle_critical_count(g, w.pair, max_n=21) == 2
