"""Graph families for tests, benchmarks and the ``gen`` command."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

import networkx as nx

from .graph import Graph
from .oracle import fig5_fixture

FAMILIES = ("cycle", "theta", "sp-random", "sp-light", "sp-all", "fig5")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def theta(*lengths: int) -> Graph:
    """Internally disjoint paths of the given lengths between vertices 0 and 1."""
    if len(lengths) < 2 or min(lengths) < 1:
        raise ValueError("theta needs at least two paths of positive length")
    if lengths.count(1) > 1:
        raise ValueError("at most one path of length 1")
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def theta_family(max_len: int = 6, max_paths: int = 4) -> Iterator[Graph]:
    for k in range(3, max_paths + 1):
        for lengths in itertools.combinations_with_replacement(range(2, max_len + 1), k):
            yield theta(*lengths)


# ---------------------------------------------------------------------------
# exhaustive enumeration through decomposition-tree shapes
# ---------------------------------------------------------------------------
#
# A transitive-edge-free graph is a root edge in parallel with a series network.
# Series networks are chains of edges and parallel networks; parallel networks
# are bundles of at least two series networks (an edge inside a bundle would be
# transitive).  Networks are identified by (kind, internal count, index).


@lru_cache(maxsize=None)
def _series(k: int) -> tuple:
    """All series networks with ``k`` internal vertices, as tuples of parts."""
    out = []
    # a chain of r parts has r - 1 cut vertices
    for r in range(2, k + 2):
        budget = k - (r - 1)
        for sizes in _compositions(budget, r):
            choices = [_parts(j) for j in sizes]
            for combo in itertools.product(*choices):
                if combo <= combo[::-1]:
                    out.append(combo)
    return tuple(out)


def _parts(j: int) -> list:
    if j == 0:
        return [("E",)]
    return [("P", j, i) for i in range(len(_parallel(j)))]


@lru_cache(maxsize=None)
def _parallel(k: int) -> tuple:
    """Multisets (as sorted tuples) of at least two series networks."""
    out = []
    items = [(j, i) for j in range(1, k + 1) for i in range(len(_series(j)))]

    def rec(start: int, remaining: int, chosen: list) -> None:
        if remaining == 0:
            if len(chosen) >= 2:
                out.append(tuple(chosen))
            return
        for idx in range(start, len(items)):
            j, _ = items[idx]
            if j > remaining:
                continue
            chosen.append(items[idx])
            rec(idx, remaining - j, chosen)
            chosen.pop()

    if k >= 2:
        rec(0, k, [])
    return tuple(out)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # parts of size 1 cannot occur (a parallel network needs >= 2 internal vertices)
    if parts == 1:
        if total != 1:
            yield (total,)
        return
    for first in range(0, total + 1):
        if first == 1:
            continue
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _realize_series(k: int, idx: int, a: int, b: int, counter: list[int], edges: list) -> None:
    parts = _series(k)[idx]
    cur = a
    for pos, part in enumerate(parts):
        if pos == len(parts) - 1:
            nxt = b
        else:
            nxt = counter[0]
            counter[0] += 1
        if part[0] == "E":
            edges.append((cur, nxt))
        else:
            for j, i in _parallel(part[1])[part[2]]:
                _realize_series(j, i, cur, nxt, counter, edges)
        cur = nxt


def sp_all(max_n: int, min_n: int = 3) -> list[Graph]:
    """Every biconnected series-parallel graph without transitive edges, up to isomorphism."""
    out: list[Graph] = []
    for n in range(max(min_n, 3), max_n + 1):
        k = n - 2
        buckets: dict[str, list[nx.Graph]] = {}
        for idx in range(len(_series(k))):
            edges = [(0, 1)]
            _realize_series(k, idx, 0, 1, [2], edges)
            h = nx.Graph(edges)
            key = nx.weisfeiler_lehman_graph_hash(h, iterations=4)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            out.append(Graph.from_edges(n, edges))
    return out


# ---------------------------------------------------------------------------
# random generation
# ---------------------------------------------------------------------------


def sp_random(n: int, seed: int = 0, p_parallel: float = 0.5) -> Graph:
    """Random transitive-edge-free biconnected series-parallel graph on ``n`` vertices.

    Grows a 4-cycle by two moves that both preserve the class: subdividing an
    edge, and adding a vertex parallel to a degree-2 vertex whose neighbours are
    non-adjacent.
    """
    if n < 4:
        return cycle(3)
    rng = random.Random(seed)
    adj: list[set[int]] = [{1, 3}, {0, 2}, {1, 3}, {0, 2}]
    edges: list[tuple[int, int]] = [(0, 1), (1, 2), (2, 3), (0, 3)]
    edge_pos = {e: i for i, e in enumerate(edges)}
    deg2 = [0, 1, 2, 3]

    def add_edge(u: int, v: int) -> None:
        e = (u, v) if u < v else (v, u)
        edge_pos[e] = len(edges)
        edges.append(e)
        adj[u].add(v)
        adj[v].add(u)

    def remove_edge(u: int, v: int) -> None:
        e = (u, v) if u < v else (v, u)
        i = edge_pos.pop(e)
        last = edges.pop()
        if i < len(edges):
            edges[i] = last
            edge_pos[last] = i
        adj[u].discard(v)
        adj[v].discard(u)

    while len(adj) < n:
        x = len(adj)
        adj.append(set())
        if rng.random() < p_parallel:
            for _ in range(64):
                y = deg2[rng.randrange(len(deg2))]
                if len(adj[y]) != 2:
                    continue
                a, b = adj[y]
                if b not in adj[a]:
                    add_edge(a, x)
                    add_edge(x, b)
                    deg2.append(x)
                    break
            else:
                p_parallel = 0.0
        if not adj[x]:
            u, v = edges[rng.randrange(len(edges))]
            remove_edge(u, v)
            add_edge(u, x)
            add_edge(x, v)
            deg2.append(x)
    return Graph.from_edges(n, edges)


def sp_light(n: int, seed: int = 0) -> Graph:
    """Random graph made of a cycle plus small light components on non-crossing arcs.

    Each component is a single vertex joined to both ends of its arc, or a fan
    (a centre joined to one end, leaves joined to the other end and the
    centre).  Arcs span at least two cycle edges, so no edge joins a
    separation pair.  Most outputs are at most 2-heavy, which random
    series-parallel graphs of this size almost never are.
    """
    if n < 4:
        return cycle(max(n, 3))
    rng = random.Random(seed)
    length = max(4, n // 3)
    edges = [(i, (i + 1) % length) for i in range(length)]
    arcs: list[tuple[int, int]] = []
    nxt = length
    tries = 0
    while nxt < n and tries < 50 * n:
        tries += 1
        a, b = sorted(rng.sample(range(length), 2))
        if b - a < 2 or (a == 0 and b == length - 1) or b - a > length - 2:
            continue
        if any(a < c < b < d or c < a < d < b for c, d in arcs):
            continue
        size = min(rng.choice((1, 1, 2, 3, 4)), n - nxt)
        if rng.random() < 0.5:
            a, b = b, a
        arcs.append((min(a, b), max(a, b)))
        if size == 1:
            edges += [(a, nxt), (nxt, b)]
        else:
            centre = nxt
            edges.append((centre, b))
            for leaf in range(nxt + 1, nxt + size):
                edges += [(a, leaf), (leaf, centre)]
        nxt += size
    return Graph.from_edges(nxt, edges)


def generate(family: str, params: list[int], seed: int = 0) -> list[Graph]:
    if family == "cycle":
        return [cycle(params[0])]
    if family == "theta":
        return [theta(*params)]
    if family == "sp-random":
        return [sp_random(params[0], seed)]
    if family == "sp-light":
        return [sp_light(params[0], seed)]
    if family == "sp-all":
        return sp_all(params[0], params[1] if len(params) > 1 else 3)
    if family == "fig5":
        return [fig5_fixture()]
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
