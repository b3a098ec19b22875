"""Series-parallel recognition and Q/S/P decomposition trees rooted at an edge.

Recognition runs the classical series/parallel reduction on ``G - e`` with the
endpoints of the root edge ``e`` as terminals, recording which subtree every
reduced edge stands for.  A second pass orients the result top-down and puts
it into canonical form: S-children along the pole-to-pole chain, P-children
ordered by smallest internal vertex (an edge child first).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import NotBiconnected, NotSeriesParallel
from .graph import Edge, Graph, is_biconnected

Q, S, P = "Q", "S", "P"


@dataclass
class DecompositionTree:
    """Ordered rooted tree; node ``i`` is described by the i-th entry of each list.

    Node ids follow a preorder walk, so ``root == 0`` and every child has a
    larger id than its parent.
    """

    label: list[str]
    poles: list[tuple[int, int]]
    children: list[list[int]]
    edge: list[Edge | None]
    parent: list[int] = field(default_factory=list)
    root: int = 0

    def __len__(self) -> int:
        return len(self.label)

    def nodes_with(self, label: str) -> list[int]:
        return [i for i, lab in enumerate(self.label) if lab == label]

    def leaves_under(self, node: int) -> list[int]:
        out, stack = [], [node]
        while stack:
            x = stack.pop()
            if self.label[x] == Q:
                out.append(x)
            else:
                stack.extend(reversed(self.children[x]))
        return out

    def subtree_vertices(self, node: int) -> set[int]:
        vs: set[int] = set()
        for q in self.leaves_under(node):
            vs.update(self.edge[q])
        return vs

    def reassemble(self, n: int | None = None) -> Graph:
        edges = [self.edge[i] for i in range(len(self)) if self.label[i] == Q]
        if n is None:
            n = 1 + max(max(e) for e in edges)
        return Graph.from_edges(n, edges)

    def to_text(self) -> str:
        """Debug dump, one node per line: ``id label pole_s pole_t children...``."""
        lines = []
        for i in range(len(self)):
            s, t = self.poles[i]
            lines.append(" ".join([str(i), self.label[i], str(s), str(t), *map(str, self.children[i])]))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def build_decomposition_tree(g: Graph, root_edge: Edge | None = None, check_biconnected: bool = True) -> DecompositionTree:
    if check_biconnected and not is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")
    if root_edge is None:
        root_edge = g.edges[0]
    r1, r2 = sorted(root_edge)
    if not g.has_edge(r1, r2):
        raise ValueError(f"root edge {root_edge} is not an edge of the graph")

    # raw builder arrays; poles are an unordered pair.  Series reductions make
    # binary S-nodes whose middle vertex is kept in mid[x]; they are flattened
    # into chains when the tree is oriented.
    lab: list[str] = []
    pa: list[int] = []
    pb: list[int] = []
    kids: list[list[int]] = []
    mid: list[int] = []

    def new(label: str, a: int, b: int, ch: list[int], m: int) -> int:
        lab.append(label)
        pa.append(a)
        pb.append(b)
        kids.append(ch)
        mid.append(m)
        return len(lab) - 1

    adj: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for u, v in g.edges:
        if (u, v) == (r1, r2):
            continue
        x = new(Q, u, v, [], -1)
        adj[u][v] = x
        adj[v][u] = x

    terminal = (r1, r2)
    queue = deque(v for v in range(g.n) if len(adj[v]) == 2 and v not in terminal)
    remaining = g.n
    while queue:
        x = queue.popleft()
        if len(adj[x]) != 2:
            continue
        (a, ta), (b, tb) = adj[x].items()
        del adj[a][x], adj[b][x]
        adj[x].clear()
        remaining -= 1
        ser = new(S, a, b, [ta, tb], x)
        old = adj[a].get(b)
        if old is None:
            adj[a][b] = adj[b][a] = ser
            continue
        if lab[old] == P:
            kids[old].append(ser)
        else:
            adj[a][b] = adj[b][a] = new(P, a, b, [old, ser], -1)
        for y in (a, b):
            if len(adj[y]) == 2 and y not in terminal:
                queue.append(y)

    if remaining != 2 or len(adj[r1]) != 1 or r2 not in adj[r1]:
        raise NotSeriesParallel("graph contains a subdivision of K4")
    top = adj[r1][r2]
    root = new(Q, r1, r2, [top], -1)
    return _canonicalize(g, root, lab, pa, pb, kids, mid)


def _series_chain(x, p, q, lab, pa, kids, mid) -> list[tuple[int, int, int]]:
    """Flatten the binary S-node ``x`` oriented ``p -> q`` into ``(child, from, to)`` triples."""
    out = []
    stack = [(x, p, q)]
    while stack:
        y, c, d = stack.pop()
        if lab[y] != S:
            out.append((y, c, d))
            continue
        k1, k2 = kids[y]
        m = mid[y]
        # k1 spans pa[y]..m and k2 spans m..pb[y]; push in reverse of visiting order
        if c == pa[y]:
            stack.append((k2, m, d))
            stack.append((k1, c, m))
        else:
            stack.append((k1, m, d))
            stack.append((k2, c, m))
    return out


def _canonicalize(g, root, lab, pa, pb, kids, mid) -> DecompositionTree:
    # orient top-down, collecting a raw preorder
    orient: list[tuple[int, int] | None] = [None] * len(lab)
    orient[root] = (pa[root], pb[root])
    order: list[int] = []
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        lx = lab[x]
        if lx == S:
            p, q = orient[x]
            chain = _series_chain(x, p, q, lab, pa, kids, mid)
            kids[x] = [y for y, _, _ in chain]
            for y, c, d in chain:
                orient[y] = (c, d)
        else:
            o = orient[x]
            for y in kids[x]:
                orient[y] = o
        stack.extend(kids[x])

    # smallest internal vertex per subtree, bottom-up
    big = g.n
    min_int = [big] * len(lab)
    for x in reversed(order):
        lx = lab[x]
        if lx == Q:
            continue
        best = big
        if lx == S:
            last = orient[x][1]
            for y in kids[x]:
                m = min_int[y]
                c = orient[y][1]
                if m < best:
                    best = m
                if c != last and c < best:
                    best = c
        else:
            for y in kids[x]:
                m = min_int[y]
                if m < best:
                    best = m
        min_int[x] = best
    for x in order:
        if lab[x] == P:
            kids[x].sort(key=lambda y: (lab[y] != Q, min_int[y]))

    # renumber in canonical preorder
    new_id = [-1] * len(lab)
    seq: list[int] = []
    stack = [root]
    while stack:
        x = stack.pop()
        new_id[x] = len(seq)
        seq.append(x)
        ch = kids[x]
        if ch:
            stack.extend(reversed(ch))
    label = [lab[x] for x in seq]
    poles = [orient[x] for x in seq]
    children = [[new_id[y] for y in kids[x]] for x in seq]
    edge = [((pa[x], pb[x]) if pa[x] < pb[x] else (pb[x], pa[x])) if lab[x] == Q else None for x in seq]
    parent = [-1] * len(seq)
    for i, ch in enumerate(children):
        for c in ch:
            parent[c] = i
    # the root Q-node carries the root edge and exactly one child
    return DecompositionTree(label, poles, children, edge, parent, 0)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def tree_violations(t: DecompositionTree, g: Graph) -> list[str]:
    """Every broken tree invariant, as human-readable strings (empty when valid)."""
    bad: list[str] = []
    n = len(t)
    if n == 0:
        return ["empty tree"]
    if t.label[t.root] != Q:
        bad.append("root is not a Q-node")
    if len(t.children[t.root]) != 1:
        bad.append("root does not have exactly one child")
    seen_edges: list[Edge] = []
    for i in range(n):
        lab, ch = t.label[i], t.children[i]
        if lab not in (Q, S, P):
            bad.append(f"node {i}: unknown label {lab!r}")
            continue
        if lab == Q:
            if i != t.root and ch:
                bad.append(f"node {i}: Q-node with children")
            e = t.edge[i]
            if e is None:
                bad.append(f"node {i}: Q-node without an edge")
                continue
            if set(e) != set(t.poles[i]):
                bad.append(f"node {i}: Q-node poles differ from its edge")
            seen_edges.append(tuple(sorted(e)))
        else:
            if len(ch) < 2:
                bad.append(f"node {i}: {lab}-node with fewer than two children")
            if t.edge[i] is not None:
                bad.append(f"node {i}: inner node carries an edge")
        for c in ch:
            if t.label[c] == lab and not (lab == Q and i == t.root):
                bad.append(f"nodes {i} and {c}: adjacent nodes share label {lab}")
            if not (0 <= c < n):
                bad.append(f"node {i}: child id {c} out of range")
        p, q = t.poles[i]
        if lab == S and ch:
            c = p
            for y in ch:
                if t.poles[y][0] != c:
                    bad.append(f"node {i}: series chain broken at child {y}")
                    break
                c = t.poles[y][1]
            else:
                if c != q:
                    bad.append(f"node {i}: series chain does not end at pole {q}")
        elif lab == P:
            for y in ch:
                if t.poles[y] != (p, q):
                    bad.append(f"node {i}: parallel child {y} has different poles")
        elif i == t.root and ch:
            if set(t.poles[ch[0]]) != set(t.poles[i]):
                bad.append("root child poles differ from the root edge")
    if sorted(seen_edges) != sorted(g.edges) or len(set(seen_edges)) != len(seen_edges):
        bad.append("reassembled edges differ from the graph")
    return bad


def validate_tree(t: DecompositionTree, g: Graph) -> bool:
    return not tree_violations(t, g)


def tree_transitive_edges(t: DecompositionTree) -> set[Edge]:
    """Edges joining the two vertices of a separation pair, read off the tree.

    Such an edge is a Q-child of a P-node (or the root edge when the root's child
    is a P-node) whose poles leave at least two non-edge components behind.
    """
    out: set[Edge] = set()
    top = t.children[t.root][0]
    for x in range(len(t)):
        if t.label[x] != P:
            continue
        ch = t.children[x]
        non_edge = sum(t.label[y] != Q for y in ch) + (0 if x == top else 1)
        if non_edge < 2:
            continue
        for y in ch:
            if t.label[y] == Q:
                out.add(t.edge[y])
        if x == top:
            out.add(t.edge[t.root])
    return out
