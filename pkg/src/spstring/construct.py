"""Grounded L/mirrored-L representations of at most 2-heavy series-parallel graphs.

The drawing starts from a heavy cycle through a separation pair ``(s, t)`` and
then hangs every remaining light component off two vertices of that cycle,
innermost components first.

Coordinates are never manipulated directly.  The layout keeps two orders, one
for anchors (x) and one for horizontal parts (y), and every placement rule is an
insertion into one of them.  Integer coordinates come from ranks at the end;
each horizontal part then stops one unit past the last vertical part it has to
cross.

Layout of the cycle ``s, q_1, ..., q_m, s`` (``q_1 .. q_m`` is the path ``p``):

* ``q_1 .. q_{m-1}`` are L-curves forming a staircase that descends to the
  right, ``q_i`` crossing ``q_{i+1}``;
* ``q_m`` is a mirrored L whose horizontal part runs back to ``s``;
* ``s`` has the deepest vertical part of all, and ``q_1`` is anchored directly
  to the left of ``s`` so that its horizontal part crosses ``s`` and ``q_2``.

Every path vertex ``X`` owns the anchor slot between itself and its successor.
A slot holds, left to right, the mirrored curves of components whose right
pole is ``X``, the L-curves of ``s``-components reaching ``X``'s successor, and
the curves of components whose left pole is ``X`` (newest block first).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .decomposition import P, Q, S, DecompositionTree, build_decomposition_tree
from .errors import (
    InsertionFailure,
    NestingViolation,
    NoSeparationPair,
    NotBiconnected,
    NotInduced,
    ShapeViolation,
    TooHeavy,
    TransitiveEdgesPresent,
)
from .geometry import L, ML, GroundedCurve, Representation, verify
from .graph import ComponentInfo, Graph, SeparationPair, connected_components, is_biconnected, light_shape
from .heaviness import HEAVY_LENGTH, LengthAnnotation, annotate, bottom_up_lengths, check_two_heavy


@dataclass
class HeavyCyclePlan:
    pair: SeparationPair
    s: int
    t: int
    p1: list[int]
    p2: list[int]
    k: int

    @property
    def cycle(self) -> list[int]:
        return self.p1 + self.p2[::-1][1:-1]

    @property
    def p(self) -> list[int]:
        """The cycle without ``s``, from ``s``'s neighbour on ``p1`` round to its neighbour on ``p2``."""
        return self.p1[1:] + self.p2[::-1][1:-1]


@dataclass
class ResidualComponent:
    vertices: frozenset[int]
    attach_u: int
    attach_v: int
    near_u: list[int]
    near_v: list[int]

    @property
    def is_path2(self) -> bool:
        return len(self.vertices) == 1


# ---------------------------------------------------------------------------
# choosing the separation pair
# ---------------------------------------------------------------------------


def _pair_candidates(t: DecompositionTree, ann: LengthAnnotation):
    """Yield ``(k, poles)`` for P-node pole pairs and for 2-heavy pairs on series chains."""
    ell, lp = ann.ell, ann.ell_prime
    for x in range(len(t)):
        if t.label[x] == P:
            lengths = [ell[y] for y in t.children[x]] + [lp[x]]
            yield sum(v >= HEAVY_LENGTH for v in lengths), t.poles[x]
        elif t.label[x] == S:
            ch = t.children[x]
            chain = [t.poles[x][0]] + [t.poles[y][1] for y in ch]
            total = ell[x] + lp[x]
            j, inner = 0, 0
            for i in range(len(ch)):
                if j < i:
                    j, inner = i, 0
                while j < len(ch) and inner < HEAVY_LENGTH:
                    inner += ell[ch[j]]
                    j += 1
                if inner >= HEAVY_LENGTH and total - inner >= HEAVY_LENGTH:
                    yield 2, (chain[i], chain[j])
                    break
                inner -= ell[ch[i]] if j > i else 0


def choose_pair(g: Graph, t: DecompositionTree, ann: LengthAnnotation) -> tuple[SeparationPair, int, list[frozenset[int]]]:
    """A separation pair with the most heavy components and its components, best first.

    Components are ordered heavy first, then by longest pole-to-pole path, then
    by smallest vertex.
    """
    if g.n == 3:
        raise NoSeparationPair("a triangle has no separation pair")
    best = None
    for k, poles in _pair_candidates(t, ann):
        key = (-k, tuple(sorted(poles)))
        if best is None or key < best[0]:
            best = (key, k, poles)
    if best is None or best[1] == 0 and not t.nodes_with(P):
        # a cycle: any pair of non-adjacent vertices; take opposite ones
        order = [t.poles[t.children[t.root][0]][0]] + [t.poles[y][1] for y in t.children[t.children[t.root][0]]]
        poles = (order[0], order[len(order) // 2])
        k = None
    else:
        _, k, poles = best
    pair = SeparationPair(*poles)
    s, tt = pair
    comps = connected_components(g, (s, tt))
    if len(comps) < 2:
        raise InsertionFailure(f"chosen pair {tuple(pair)} does not separate the graph")
    heavy = {c: any(s not in g.adj[v] and tt not in g.adj[v] for v in c) for c in comps}
    n_heavy = sum(heavy.values())
    if k is not None and n_heavy != k:
        raise InsertionFailure(f"pair {tuple(pair)}: expected {k} heavy components, found {n_heavy}")
    if n_heavy > 2:
        raise TooHeavy(tuple(pair), [HEAVY_LENGTH] * n_heavy)
    lengths = {c: len(longest_pole_path(g, c, s, tt)) - 1 for c in comps}
    comps.sort(key=lambda c: (not heavy[c], -lengths[c], min(c)))
    return pair, n_heavy, comps


# ---------------------------------------------------------------------------
# longest pole paths
# ---------------------------------------------------------------------------


def longest_pole_path(g: Graph, internal: frozenset[int] | set[int], s: int, t: int) -> list[int]:
    """A longest ``s``-``t`` path through one component, read off its decomposition tree.

    The component is closed with a virtual ``s``-``t`` edge, decomposed with that
    edge as root, and the path follows every series chain and the longest branch
    of every parallel node.
    """
    verts = sorted(set(internal) | {s, t})
    local = {v: i for i, v in enumerate(verts)}
    edges = [(local[a], local[b]) for a, b in g.induced(verts) if {a, b} != {s, t}]
    edges.append((local[s], local[t]))
    h = Graph.from_edges(len(verts), edges)
    tree = build_decomposition_tree(h, root_edge=(local[s], local[t]), check_biconnected=False)
    ell = bottom_up_lengths(tree)
    top = tree.children[tree.root][0]
    path = [tree.poles[top][0]]
    stack = [top]
    while stack:
        x = stack.pop()
        lab = tree.label[x]
        if lab == Q:
            path.append(tree.poles[x][1])
        elif lab == S:
            stack.extend(reversed(tree.children[x]))
        else:
            ch = tree.children[x]
            stack.append(max(ch, key=lambda y: (ell[y], -ch.index(y))))
    out = [verts[i] for i in path]
    if out[0] != s:
        out.reverse()
    _assert_induced(g, out)
    return out


def _assert_induced(g: Graph, path: list[int]) -> None:
    pos = {v: i for i, v in enumerate(path)}
    for i, v in enumerate(path):
        for w in g.adj[v]:
            j = pos.get(w)
            if j is not None and abs(i - j) > 1:
                raise NotInduced(f"path has chord {v}-{w}")


def plan_heavy_cycle(g: Graph, t: DecompositionTree | None = None, ann: LengthAnnotation | None = None) -> tuple[HeavyCyclePlan, list[frozenset[int]]]:
    if t is None:
        t = build_decomposition_tree(g)
    if ann is None:
        ann = annotate(t)
    pair, k, comps = choose_pair(g, t, ann)
    s, tt = pair
    p1 = longest_pole_path(g, comps[0], s, tt)
    p2 = longest_pole_path(g, comps[1], s, tt)
    return HeavyCyclePlan(pair, s, tt, p1, p2, k), comps


# ---------------------------------------------------------------------------
# residual components
# ---------------------------------------------------------------------------


def residual_components(g: Graph, plan: HeavyCyclePlan) -> tuple[list[ResidualComponent], list[ResidualComponent]]:
    """Components of ``G - p1 - p2``, split into those away from ``s`` and those touching ``s``.

    Poles are ordered along ``p`` (``attach_u`` left of ``attach_v``); for
    components touching ``s``, ``attach_u`` is ``s``.
    """
    on_cycle = set(plan.p1) | set(plan.p2)
    pos = {v: i for i, v in enumerate(plan.p)}
    inner, at_s = [], []
    for comp in connected_components(g, on_cycle):
        attach = sorted({w for v in comp for w in g.adj[v] if w in on_cycle})
        if len(attach) != 2:
            raise InsertionFailure(f"component {sorted(comp)} attaches to {attach}, expected two vertices")
        a, b = attach
        if plan.s in attach:
            u, v = plan.s, (b if a == plan.s else a)
        else:
            u, v = sorted(attach, key=pos.__getitem__)
        info = ComponentInfo(SeparationPair(u, v), frozenset(comp), False)
        light_shape(info, g)
        near_u = sorted(x for x in comp if u in g.adj[x])
        near_v = sorted(x for x in comp if v in g.adj[x])
        r = ResidualComponent(frozenset(comp), u, v, near_u, near_v)
        (at_s if u == plan.s else inner).append(r)
    return inner, at_s


def order_residuals(inner: list[ResidualComponent], at_s: list[ResidualComponent], p: list[int]) -> list[ResidualComponent]:
    """Processing order: nested before enclosing, left before right, ``s``-components last."""
    pos = {v: i for i, v in enumerate(p)}
    spans = sorted(((pos[r.attach_u], pos[r.attach_v]) for r in inner))
    for i in range(len(spans)):
        a1, b1 = spans[i]
        for a2, b2 in spans[i + 1 :]:
            if a2 >= b1:
                break
            if a1 < a2 < b1 < b2:
                raise NestingViolation(f"attachment intervals {(p[a1], p[b1])} and {(p[a2], p[b2])} cross")
    first = sorted(inner, key=lambda r: (pos[r.attach_v], -pos[r.attach_u], min(r.vertices)))
    last = sorted(at_s, key=lambda r: (pos[r.attach_v], min(r.vertices)))
    return first + last


# ---------------------------------------------------------------------------
# symbolic layout
# ---------------------------------------------------------------------------


@dataclass
class _Layout:
    plan: HeavyCyclePlan
    orientation: dict[int, str] = field(default_factory=dict)
    reach: dict[int, list[int]] = field(default_factory=dict)
    far_left: list[int] = field(default_factory=list)
    slot_a: dict[int, list[int]] = field(default_factory=lambda: defaultdict(list))
    slot_b: dict[int, list[int]] = field(default_factory=lambda: defaultdict(list))
    slot_c: dict[int, list[list[int]]] = field(default_factory=lambda: defaultdict(list))
    above: dict[int, list[int]] = field(default_factory=lambda: defaultdict(list))

    def curve(self, v: int, orientation: str, reach: list[int]) -> None:
        self.orientation[v] = orientation
        self.reach[v] = reach

    def anchor_order(self) -> list[int]:
        p = self.plan.p
        out = list(self.far_left) + [p[0], self.plan.s]
        for i, x in enumerate(p):
            if i:
                out.append(x)
            out += self.slot_a[x]
            out += self.slot_b[x]
            for block in reversed(self.slot_c[x]):
                out += block
        return out

    def depth_order(self) -> list[int]:
        out = []
        for x in self.plan.p:
            out += self.above[x]
            out.append(x)
        out.append(self.plan.s)
        return out

    def realize(self, only: set[int] | None = None) -> Representation:
        xs = [v for v in self.anchor_order() if only is None or v in only]
        ys = [v for v in self.depth_order() if only is None or v in only]
        ax = {v: 2 * (i + 1) for i, v in enumerate(xs)}
        dy = {v: i + 1 for i, v in enumerate(ys)}
        curves = []
        for v in xs:
            o = self.orientation[v]
            targets = [ax[w] for w in self.reach[v] if w in ax]
            if o == L:
                tip = max(targets, default=ax[v]) + 1
            else:
                tip = min(targets, default=ax[v]) - 1
            curves.append(GroundedCurve(v, o, ax[v], dy[v], tip))
        return Representation.of(curves)


def draw_heavy_cycle(plan: HeavyCyclePlan) -> _Layout:
    lay = _Layout(plan)
    p = plan.p
    lay.curve(plan.s, L, [])
    for i, x in enumerate(p[:-1]):
        lay.curve(x, L, [p[i + 1]] + ([plan.s] if i == 0 else []))
    lay.curve(p[-1], ML, [plan.s])
    return lay


def insert_light_component(lay: _Layout, r: ResidualComponent, g: Graph) -> None:
    plan = lay.plan
    u, v = r.attach_u, r.attach_v
    if u != plan.s:
        if r.is_path2:
            (w,) = r.vertices
            lay.curve(w, L, [v])
            lay.slot_c[u].append([w])
            lay.above[v].append(w)
            return
        for x in r.near_v:
            lay.curve(x, ML, [v] + [y for y in r.near_u if y in g.adj[x]])
            lay.slot_a[v].append(x)
            lay.above[v].append(x)
        for y in r.near_u:
            lay.curve(y, L, [])
            lay.above[v].append(y)
        lay.slot_c[u].append(list(r.near_u))
        return

    p = plan.p
    idx = p.index(v)
    if idx == 0 or idx == len(p) - 1:
        raise InsertionFailure(f"component {sorted(r.vertices)} hangs between s and a neighbour of s")
    succ = p[idx + 1]
    if r.is_path2:
        (w,) = r.vertices
        lay.curve(w, ML, [v, plan.s])
        lay.slot_a[v].append(w)
        lay.above[v].append(w)
        return
    for x in r.near_u:
        lay.curve(x, L, [plan.s] + [y for y in r.near_v if y in g.adj[x]])
        lay.far_left.insert(0, x)
        lay.above[succ].append(x)
    for y in r.near_v:
        lay.curve(y, L, [])
        lay.slot_b[v].append(y)
        lay.above[succ].append(y)


def _triangle(g: Graph) -> Representation:
    a, b, c = range(3)
    return Representation.of(
        [GroundedCurve(a, L, 2, 1, 7), GroundedCurve(b, L, 4, 2, 7), GroundedCurve(c, L, 6, 3, 7)]
    )


def construct_representation(g: Graph, check_each: bool = False) -> Representation:
    """Grounded L/mirrored-L 1-string representation of ``g``, verified before it is returned.

    ``check_each`` re-verifies the drawn induced subgraph after every inserted
    component (quadratic per step; meant for tests).
    """
    if not is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")
    t = build_decomposition_tree(g)
    ann = annotate(t)
    report = check_two_heavy(t, ann)
    if report.transitive_edges:
        raise TransitiveEdgesPresent(report.transitive_edges)
    if not report.at_most_2_heavy:
        raise TooHeavy(report.witness.poles, report.witness.lengths)
    if g.n == 3:
        rep = _triangle(g)
    else:
        plan, _ = plan_heavy_cycle(g, t, ann)
        lay = draw_heavy_cycle(plan)
        drawn = set(plan.cycle)
        if check_each:
            _check(g, lay, drawn, "heavy cycle")
        inner, at_s = residual_components(g, plan)
        for r in order_residuals(inner, at_s, plan.p):
            insert_light_component(lay, r, g)
            if check_each:
                drawn |= r.vertices
                _check(g, lay, drawn, f"component {sorted(r.vertices)}")
        rep = lay.realize()
    result = verify(g, rep)
    if not result.ok:
        raise InsertionFailure("verifier rejected the drawing: " + "; ".join(result.lines()))
    return rep


def _check(g: Graph, lay: _Layout, drawn: set[int], what: str) -> None:
    order = sorted(drawn)
    local = {v: i for i, v in enumerate(order)}
    sub = Graph.from_edges(len(order), [(local[a], local[b]) for a, b in g.induced(order)])
    rep = lay.realize(drawn)
    rep = Representation.of(
        GroundedCurve(local[c.vertex], c.orientation, c.anchor_x, c.depth_y, c.tip_x) for c in rep.curves
    )
    result = verify(sub, rep)
    if not result.ok:
        raise InsertionFailure(f"after {what}: " + "; ".join(result.lines()))
