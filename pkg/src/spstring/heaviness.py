"""Linear-time test for being at most 2-heavy.

Two passes over the decomposition tree compute, for every node, the longest
pole-to-pole path inside its subgraph (``ell``) and inside the rest of the
graph (``ell_prime``).  A component is heavy exactly when its longest
pole-to-pole path has at least four edges, so each P-node contributes the
entries ``ell`` of its children plus its own ``ell_prime``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import P, Q, S, DecompositionTree, build_decomposition_tree, tree_transitive_edges
from .errors import TransitiveEdgesPresent
from .graph import Edge, Graph

HEAVY_LENGTH = 4


@dataclass
class LengthAnnotation:
    ell: list[int]
    ell_prime: list[int]


@dataclass(frozen=True)
class PNodeEntry:
    node: int
    poles: tuple[int, int]
    lengths: tuple[int, ...]  # children first, parent component last

    @property
    def heavy_count(self) -> int:
        return sum(x >= HEAVY_LENGTH for x in self.lengths)


@dataclass
class HeavinessReport:
    entries: list[PNodeEntry]
    at_most_2_heavy: bool
    witness: PNodeEntry | None
    transitive_edges: set[Edge] = field(default_factory=set)

    @property
    def advisory(self) -> bool:
        """True when transitive edges void the outerstring meaning of the verdict."""
        return bool(self.transitive_edges)

    @property
    def max_heavy(self) -> int:
        return max((e.heavy_count for e in self.entries), default=0)


def bottom_up_lengths(t: DecompositionTree) -> list[int]:
    ell = [0] * len(t)
    # preorder ids: children always follow their parent
    for x in range(len(t) - 1, -1, -1):
        lab = t.label[x]
        if lab == Q and x != t.root:
            ell[x] = 1
        elif lab == S:
            ell[x] = sum(ell[y] for y in t.children[x])
        elif lab == P:
            ell[x] = max(ell[y] for y in t.children[x])
        else:
            ell[x] = 1
    return ell


def top_down_lengths(t: DecompositionTree, ell: list[int]) -> list[int]:
    lp = [0] * len(t)
    top = t.children[t.root][0]
    lp[t.root] = ell[top]
    lp[top] = 1
    for x in range(len(t)):
        ch = t.children[x]
        if x == t.root or not ch:
            continue
        if t.label[x] == S:
            total = ell[x] + lp[x]
            for y in ch:
                lp[y] = total - ell[y]
        else:
            j = max(range(len(ch)), key=lambda i: (ell[ch[i]], -i))
            rest = max((ell[ch[i]] for i in range(len(ch)) if i != j), default=0)
            for i, y in enumerate(ch):
                lp[y] = max(lp[x], ell[x]) if i != j else max(lp[x], rest)
    return lp


def annotate(t: DecompositionTree) -> LengthAnnotation:
    ell = bottom_up_lengths(t)
    return LengthAnnotation(ell, top_down_lengths(t, ell))


def check_two_heavy(t: DecompositionTree, lengths: LengthAnnotation | None = None, strict: bool = False) -> HeavinessReport:
    """Per-P-node heavy counts and the graph verdict.

    With ``strict=True`` a graph with transitive edges raises instead of
    returning an advisory report.
    """
    if lengths is None:
        lengths = annotate(t)
    ell, lp = lengths.ell, lengths.ell_prime
    trans = tree_transitive_edges(t)
    if strict and trans:
        raise TransitiveEdgesPresent(trans)
    entries = []
    witness = None
    for x in range(len(t)):
        if t.label[x] != P:
            continue
        e = PNodeEntry(x, t.poles[x], tuple(ell[y] for y in t.children[x]) + (lp[x],))
        entries.append(e)
        if witness is None and e.heavy_count > 2:
            witness = e
    return HeavinessReport(entries, witness is None, witness, trans)


def decide(g: Graph) -> HeavinessReport:
    """Recognise, decompose, annotate and check in one linear-time pass."""
    t = build_decomposition_tree(g)
    return check_two_heavy(t)
