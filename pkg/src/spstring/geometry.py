"""Exact verification of grounded one-bend orthogonal representations.

Coordinates are integers, the ground line is ``y = 0`` and ``y`` grows
downward.  A curve runs from its anchor ``(anchor_x, anchor_y)`` vertically to
the bend ``(anchor_x, depth_y)`` and then horizontally to ``(tip_x, depth_y)``.
Valid curves have ``anchor_y == 0``; the field exists so that broken inputs can
be described and diagnosed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable

import numpy as np

from .errors import DegeneratePosition, VertexMismatch
from .graph import Edge, Graph

L, ML = "L", "ML"


@dataclass(frozen=True)
class GroundedCurve:
    vertex: int
    orientation: str
    anchor_x: int
    depth_y: int
    tip_x: int
    anchor_y: int = 0

    def segments(self) -> tuple[tuple[tuple[int, int], tuple[int, int]], tuple[tuple[int, int], tuple[int, int]]]:
        bend = (self.anchor_x, self.depth_y)
        return ((self.anchor_x, self.anchor_y), bend), (bend, (self.tip_x, self.depth_y))

    def moved(self, dx: int = 0, dy: int = 0) -> "GroundedCurve":
        return replace(
            self,
            anchor_x=self.anchor_x + dx,
            tip_x=self.tip_x + dx,
            depth_y=self.depth_y + dy,
            anchor_y=self.anchor_y + dy,
        )


@dataclass(frozen=True)
class Representation:
    curves: tuple[GroundedCurve, ...]

    @classmethod
    def of(cls, curves: Iterable[GroundedCurve]) -> "Representation":
        return cls(tuple(sorted(curves, key=lambda c: c.vertex)))

    def __len__(self) -> int:
        return len(self.curves)

    def curve(self, v: int) -> GroundedCurve:
        for c in self.curves:
            if c.vertex == v:
                return c
        raise KeyError(v)

    def uses_mirrored(self) -> bool:
        return any(c.orientation == ML for c in self.curves)


# ---------------------------------------------------------------------------
# crossings
# ---------------------------------------------------------------------------


def degeneracies(rep: Representation) -> list[str]:
    """Coincidences that would make a crossing ambiguous."""
    out = []
    ax = Counter(c.anchor_x for c in rep.curves)
    dy = Counter(c.depth_y for c in rep.curves)
    out += [f"anchors share x = {x}" for x, k in sorted(ax.items()) if k > 1]
    out += [f"horizontal parts share y = {y}" for y, k in sorted(dy.items()) if k > 1]
    anchor_ys = {c.anchor_y for c in rep.curves}
    for c in rep.curves:
        if c.tip_x in ax:
            out.append(f"tip of {c.vertex} touches a vertical part at x = {c.tip_x}")
        if c.depth_y in anchor_ys:
            out.append(f"horizontal part of {c.vertex} touches a vertical endpoint at y = {c.depth_y}")
    return out


def crossings(rep: Representation, chunk: int = 2048) -> Counter[Edge]:
    """Crossing count for every pair of curves that meet, keyed by ``(min, max)`` vertex.

    A horizontal part crosses a vertical part when its ``y`` lies strictly inside
    the vertical extent and the vertical's ``x`` lies strictly inside the
    horizontal extent; two curves can therefore meet at most twice.
    """
    bad = degeneracies(rep)
    if bad:
        raise DegeneratePosition("; ".join(bad))
    n = len(rep.curves)
    if n == 0:
        return Counter()
    verts = np.array([c.vertex for c in rep.curves], dtype=np.int64)
    ax = np.array([c.anchor_x for c in rep.curves], dtype=np.int64)
    tx = np.array([c.tip_x for c in rep.curves], dtype=np.int64)
    dy = np.array([c.depth_y for c in rep.curves], dtype=np.int64)
    ay = np.array([c.anchor_y for c in rep.curves], dtype=np.int64)
    hlo, hhi = np.minimum(ax, tx), np.maximum(ax, tx)
    vlo, vhi = np.minimum(ay, dy), np.maximum(ay, dy)
    out: Counter[Edge] = Counter()
    for start in range(0, n, chunk):
        rows = slice(start, min(n, start + chunk))
        # hits[i, j]: horizontal of curve i crosses vertical of curve j
        hits = (
            (hlo[rows, None] < ax[None, :])
            & (ax[None, :] < hhi[rows, None])
            & (vlo[None, :] < dy[rows, None])
            & (dy[rows, None] < vhi[None, :])
        )
        for i, j in zip(*np.nonzero(hits)):
            a, b = int(verts[start + i]), int(verts[j])
            if a != b:
                out[(a, b) if a < b else (b, a)] += 1
    return out


def crossings_bruteforce(rep: Representation) -> Counter[Edge]:
    """Reference count: all four segment pairs per curve pair, orientation tests only."""

    def orient(p, q, r) -> int:
        v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        return (v > 0) - (v < 0)

    def proper(s1, s2) -> bool:
        p, q = s1
        r, s = s2
        return orient(p, q, r) * orient(p, q, s) < 0 and orient(r, s, p) * orient(r, s, q) < 0

    out: Counter[Edge] = Counter()
    cs = rep.curves
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            k = sum(proper(a, b) for a in cs[i].segments() for b in cs[j].segments())
            if k:
                a, b = cs[i].vertex, cs[j].vertex
                out[(a, b) if a < b else (b, a)] += k
    return out


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    grounded: bool
    shape_ok: bool
    adjacency_ok: bool
    one_string_ok: bool
    general_position_ok: bool
    mode: str = "LL"
    missing: list[Edge] = field(default_factory=list)
    extra: list[Edge] = field(default_factory=list)
    multiple: list[Edge] = field(default_factory=list)
    off_ground: list[int] = field(default_factory=list)
    bad_shape: list[int] = field(default_factory=list)
    degenerate: list[str] = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.grounded and self.shape_ok and self.adjacency_ok and self.one_string_ok and self.general_position_ok

    def lines(self) -> list[str]:
        def flag(name: str, value: bool, detail: str = "") -> str:
            return f"{name}: {'yes' if value else 'no'}{detail}"

        return [
            flag("grounded", self.grounded, f" (off ground: {self.off_ground})" if self.off_ground else ""),
            flag(f"shape_ok[{self.mode}]", self.shape_ok, f" (bad curves: {self.bad_shape})" if self.bad_shape else ""),
            flag(
                "adjacency_ok",
                self.adjacency_ok,
                "".join(
                    [
                        f" (missing crossings: {self.missing})" if self.missing else "",
                        f" (extra crossings: {self.extra})" if self.extra else "",
                    ]
                ),
            ),
            flag("one_string_ok", self.one_string_ok, f" (repeated crossings: {self.multiple})" if self.multiple else ""),
            flag("general_position_ok", self.general_position_ok, f" ({'; '.join(self.degenerate)})" if self.degenerate else ""),
        ]


def _shape_ok(c: GroundedCurve, mode: str) -> bool:
    if c.depth_y <= c.anchor_y:
        return False
    if c.orientation == L:
        good = c.tip_x > c.anchor_x
    elif c.orientation == ML:
        good = c.tip_x < c.anchor_x and mode != "Lonly"
    else:
        good = False
    return good


def verify(g: Graph, rep: Representation, mode: str = "LL") -> VerificationReport:
    """Check every defining property of a grounded (L or mirrored-L) 1-string representation of ``g``.

    ``mode`` is ``"LL"`` (both orientations allowed) or ``"Lonly"``.
    """
    if mode not in ("LL", "Lonly"):
        raise ValueError(f"unknown mode {mode!r}")
    vs = [c.vertex for c in rep.curves]
    if sorted(vs) != list(range(g.n)):
        raise VertexMismatch(f"representation covers {len(set(vs))} vertices, graph has {g.n}")
    off_ground = [c.vertex for c in rep.curves if c.anchor_y != 0 or c.depth_y <= 0]
    bad_shape = [c.vertex for c in rep.curves if not _shape_ok(c, mode)]
    degenerate = degeneracies(rep)
    report = VerificationReport(
        grounded=not off_ground,
        shape_ok=not bad_shape,
        adjacency_ok=False,
        one_string_ok=False,
        general_position_ok=not degenerate,
        mode=mode,
        off_ground=off_ground,
        bad_shape=bad_shape,
        degenerate=degenerate,
    )
    if degenerate:
        return report
    counts = crossings(rep)
    edges = set(g.edges)
    report.counts = counts
    report.missing = sorted(edges - set(counts))
    report.extra = sorted(set(counts) - edges)
    report.multiple = sorted(e for e, k in counts.items() if k > 1)
    report.adjacency_ok = not report.missing and not report.extra
    report.one_string_ok = not report.multiple
    return report
