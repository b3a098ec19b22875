"""Simple undirected graphs, separation pairs and definition-level component classifiers.

Everything here is deliberately brute force: these routines are the ground truth
that the linear-time decomposition path is checked against.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import (
    GraphFormatError,
    InstanceTooLarge,
    NotBiconnected,
    NotSeparationPair,
    ShapeViolation,
)

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``labels[i]`` is the caller's name for vertex ``i`` (defaults to ``i``).
    Equality compares vertex count and edge set only.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[frozenset[int], ...]
    labels: tuple[Hashable, ...] = field(default=())

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[Hashable] | None = None) -> "Graph":
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        out: list[Edge] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            out.append((u, v) if u < v else (v, u))
        out.sort()
        if labels is None:
            labels = range(n)
        elif len(labels) != n:
            raise GraphFormatError("label count does not match vertex count")
        return cls(n, tuple(out), tuple(frozenset(s) for s in nbrs), tuple(labels))

    @classmethod
    def from_labeled_edges(cls, pairs: Iterable[tuple[Hashable, Hashable]]) -> "Graph":
        """Build a graph from arbitrary hashable vertex names, remapped densely in sorted order."""
        pairs = list(pairs)
        names = sorted({x for e in pairs for x in e}, key=lambda x: (str(type(x)), x))
        index = {name: i for i, name in enumerate(names)}
        return cls.from_edges(len(names), [(index[a], index[b]) for a, b in pairs], labels=names)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> Hashable:
        return self.labels[v] if self.labels else v

    def index_of(self, label: Hashable) -> int:
        return self.labels.index(label)

    def induced(self, vertices: Iterable[int]) -> list[Edge]:
        vs = set(vertices)
        return [(u, v) for (u, v) in self.edges if u in vs and v in vs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, order=True)
class SeparationPair:
    s: int
    t: int

    def __post_init__(self) -> None:
        if self.s > self.t:
            a, b = self.t, self.s
            object.__setattr__(self, "s", a)
            object.__setattr__(self, "t", b)

    def __iter__(self):
        return iter((self.s, self.t))


@dataclass(frozen=True)
class LightShape:
    """One of the three shapes a light component can take.

    ``kind`` is ``"path2"`` (single vertex ``center`` adjacent to both poles),
    ``"fan_t"`` (``center`` adjacent to pole t, every leaf adjacent to pole s and
    ``center``) or ``"fan_s"`` (the mirror image).
    """

    kind: str
    center: int
    leaves: frozenset[int] = frozenset()

    @property
    def vertices(self) -> frozenset[int]:
        return self.leaves | {self.center}


@dataclass(frozen=True)
class ComponentInfo:
    pair: SeparationPair
    internal_vertices: frozenset[int]
    heavy: bool
    critical: bool | None = None
    light_shape: LightShape | None = None


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------


def _reach(g: Graph, start: int, removed: frozenset[int] | set[int]) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                queue.append(y)
    return seen


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g`` minus ``removed``, ordered by smallest vertex."""
    removed = set(removed)
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v in removed or v in seen:
            continue
        comp = _reach(g, v, removed)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(_reach(g, 0, set())) == g.n


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points by an iterative low-point DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    timer = 0
    adj = [list(a) for a in g.adj]
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = adj[v][i]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def _require_biconnected(g: Graph) -> None:
    if not is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")


# ---------------------------------------------------------------------------
# separation pairs (exhaustive)
# ---------------------------------------------------------------------------


def _separates(g: Graph, s: int, t: int) -> bool:
    rest = [v for v in range(g.n) if v != s and v != t]
    if not rest:
        return False
    return len(_reach(g, rest[0], {s, t})) < len(rest)


def separation_pairs(g: Graph) -> list[SeparationPair]:
    _require_biconnected(g)
    return [SeparationPair(s, t) for s, t in itertools.combinations(range(g.n), 2) if _separates(g, s, t)]


def transitive_edges(g: Graph) -> set[Edge]:
    _require_biconnected(g)
    return {(u, v) for (u, v) in g.edges if _separates(g, u, v)}


def components_of_pair(g: Graph, pair: SeparationPair) -> list[ComponentInfo]:
    s, t = pair
    comps = connected_components(g, (s, t))
    if len(comps) < 2:
        raise NotSeparationPair(f"{(s, t)} does not disconnect the graph")
    out = []
    for comp in comps:
        heavy = any(s not in g.adj[v] and t not in g.adj[v] for v in comp)
        out.append(ComponentInfo(pair, comp, heavy))
    return out


# ---------------------------------------------------------------------------
# classifiers
# ---------------------------------------------------------------------------


def classify_heavy(c: ComponentInfo, g: Graph) -> bool:
    s, t = c.pair
    return any(s not in g.adj[v] and t not in g.adj[v] for v in c.internal_vertices)


def classify_critical(c: ComponentInfo, g: Graph, max_internal: int = 20) -> bool:
    """Exhaustive check for a pole-to-pole path ``s - p_s - v - p_t - t``.

    ``v`` must avoid both poles, no vertex of ``p_s`` may touch ``t`` and no
    vertex of ``p_t`` may touch ``s``.
    """
    if len(c.internal_vertices) > max_internal:
        raise InstanceTooLarge(f"component has {len(c.internal_vertices)} internal vertices (> {max_internal})")
    s, t = c.pair
    inside = c.internal_vertices
    adj = g.adj
    for v in sorted(inside):
        if s in adj[v] or t in adj[v]:
            continue
        if _critical_path_exists(adj, inside, s, t, v):
            return True
    return False


def _critical_path_exists(adj, inside: frozenset[int], s: int, t: int, v: int) -> bool:
    # phase 0: walking from s towards v (vertices must avoid t); phase 1: v towards t
    def extend(x: int, used: set[int], phase: int) -> bool:
        for y in adj[x]:
            if phase == 1 and y == t:
                return True
            if y not in inside or y in used:
                continue
            if y == v:
                if phase == 0:
                    used.add(y)
                    if extend(y, used, 1):
                        return True
                    used.discard(y)
                continue
            if phase == 0 and t in adj[y]:
                continue
            if phase == 1 and s in adj[y]:
                continue
            used.add(y)
            if extend(y, used, phase):
                return True
            used.discard(y)
        return False

    return extend(s, set(), 0)


def light_shape(c: ComponentInfo, g: Graph) -> LightShape:
    s, t = c.pair
    inside = c.internal_vertices
    adj = g.adj
    if not inside:
        raise ShapeViolation("component has no internal vertices")
    if len(inside) == 1:
        (w,) = inside
        if s in adj[w] and t in adj[w]:
            return LightShape("path2", w)
        raise ShapeViolation(f"single internal vertex {w} is not adjacent to both poles")
    near_s = {v for v in inside if s in adj[v]}
    near_t = {v for v in inside if t in adj[v]}
    if near_s & near_t:
        raise ShapeViolation(f"vertex adjacent to both poles among {len(inside)} internal vertices")
    if near_s | near_t != inside:
        raise ShapeViolation("component is heavy")
    if len(near_t) == 1:
        (center,) = near_t
        kind, leaves = "fan_t", frozenset(near_s)
    elif len(near_s) == 1:
        (center,) = near_s
        kind, leaves = "fan_s", frozenset(near_t)
    else:
        raise ShapeViolation("both pole neighbourhoods have two or more vertices")
    expected = {(min(center, x), max(center, x)) for x in leaves}
    actual = set(g.induced(inside))
    if actual != expected:
        raise ShapeViolation(f"internal edges {sorted(actual)} do not form a star around {center}")
    return LightShape(kind, center, leaves)


def classify_component(c: ComponentInfo, g: Graph, max_internal: int = 20) -> ComponentInfo:
    """Return ``c`` with the critical flag and, for light components, the shape filled in."""
    critical = classify_critical(c, g, max_internal) if c.heavy else False
    shape = None if c.heavy else light_shape(c, g)
    return ComponentInfo(c.pair, c.internal_vertices, c.heavy, critical, shape)
