"""Brute-force ground truth.

Nothing in here looks at decomposition trees: the only shared type with the
fast path is :class:`~spstring.graph.Graph`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InstanceTooLarge
from .graph import (
    Graph,
    SeparationPair,
    classify_critical,
    components_of_pair,
    separation_pairs,
)

DEFAULT_MAX_N = 16


@dataclass(frozen=True)
class HeavinessWitness:
    k: int
    pair: SeparationPair | None
    heavy_counts: dict[SeparationPair, int]


def _check_size(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise InstanceTooLarge(f"graph has {g.n} vertices (> {max_n})")


def oracle_heaviness(g: Graph, max_n: int = DEFAULT_MAX_N) -> HeavinessWitness:
    """Largest number of heavy components over all separation pairs."""
    _check_size(g, max_n)
    counts = {}
    for pair in separation_pairs(g):
        counts[pair] = sum(c.heavy for c in components_of_pair(g, pair))
    if not counts:
        return HeavinessWitness(0, None, counts)
    best = max(counts, key=lambda p: (counts[p], -p.s, -p.t))
    return HeavinessWitness(counts[best], best, counts)


def oracle_critical_count(g: Graph, pair: SeparationPair, max_n: int = DEFAULT_MAX_N) -> int:
    _check_size(g, max_n)
    return sum(classify_critical(c, g) for c in components_of_pair(g, pair) if c.heavy)


def oracle_longest_path(
    g: Graph,
    s: int,
    t: int,
    max_n: int = DEFAULT_MAX_N,
    edges: set[tuple[int, int]] | None = None,
) -> int:
    """Length of a longest simple s-t path, optionally restricted to an edge subset.

    Returns -1 when no path exists.
    """
    _check_size(g, max_n)
    if edges is None:
        nbrs = [list(a) for a in g.adj]
    else:
        nbrs = [[] for _ in range(g.n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
    best = -1
    used = [False] * g.n
    used[s] = True

    def walk(x: int, length: int) -> None:
        nonlocal best
        for y in nbrs[x]:
            if y == t:
                best = max(best, length + 1)
            elif not used[y]:
                used[y] = True
                walk(y, length + 1)
                used[y] = False

    if s == t:
        return 0
    walk(s, 0)
    return best


def has_k4_subdivision(g: Graph, max_n: int = 10) -> bool:
    """Search every choice of four branch vertices for six internally disjoint paths."""
    _check_size(g, max_n)
    adj = g.adj
    for branch in itertools.combinations(range(g.n), 4):
        if any(len(adj[b]) < 3 for b in branch):
            continue
        pairs = list(itertools.combinations(branch, 2))
        used = set(branch)
        if _route(adj, pairs, 0, used):
            return True
    return False


def _route(adj, pairs, i, used) -> bool:
    if i == len(pairs):
        return True
    a, b = pairs[i]

    def walk(x: int) -> bool:
        for y in adj[x]:
            if y == b:
                if _route(adj, pairs, i + 1, used):
                    return True
            elif y not in used:
                used.add(y)
                if walk(y):
                    return True
                used.discard(y)
        return False

    return walk(a)


# ---------------------------------------------------------------------------
# the graph that admits an L/mirrored-L drawing but no all-L drawing
# ---------------------------------------------------------------------------

FIG5_EDGES = (
    ("s", "u"), ("u", "t"),
    ("s", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "t"),
    ("s", "w1"), ("w1", "w2"), ("w2", "w3"), ("w3", "w4"), ("w4", "w5"), ("w5", "t"),
    ("s", "y1"), ("y1", "y2"), ("y2", "v3"), ("v3", "y4"), ("y4", "y5"), ("y5", "t"),
    ("s", "x1"), ("x1", "x2"), ("x2", "w3"), ("w3", "x4"), ("x4", "x5"), ("x5", "t"),
)  # fmt: skip
"""Edge set of the 21-vertex example.

Three s-t routes: the path s-u-t, and two halves built alike. On the v-half the
path s-v1-...-v5-t meets a second route s-y1-y2-v3-y4-y5-t at its middle vertex
v3; the w-half is the same with x in place of y.  There is no x3 or y3.
"""


def fig5_fixture() -> Graph:
    return Graph.from_labeled_edges(FIG5_EDGES)
