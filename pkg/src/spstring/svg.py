"""Deterministic SVG rendering of grounded representations."""

from __future__ import annotations

from .geometry import Representation, crossings

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def render_svg(rep: Representation, scale: int = 12, mark_crossings: bool = False) -> str:
    """One polyline per curve below a ground line, anchors labelled with vertex ids.

    The grid is scaled by ``scale`` pixels per unit and padded by two units; the
    output depends only on the input, so equal inputs give identical bytes.
    """
    pad = 2
    xs = [x for c in rep.curves for x in (c.anchor_x, c.tip_x)] or [0]
    ys = [y for c in rep.curves for y in (c.anchor_y, c.depth_y)] or [0]
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(min(ys), 0) - pad, max(ys) + pad

    def px(x: int) -> int:
        return (x - x0) * scale

    def py(y: int) -> int:
        return (y - y0) * scale

    w, h = px(x1), py(y1)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<line x1="0" y1="{py(0)}" x2="{w}" y2="{py(0)}" stroke="black" stroke-width="2"/>',
    ]
    for i, c in enumerate(rep.curves):
        color = _COLORS[i % len(_COLORS)]
        pts = f"{px(c.anchor_x)},{py(c.anchor_y)} {px(c.anchor_x)},{py(c.depth_y)} {px(c.tip_x)},{py(c.depth_y)}"
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5" data-vertex="{c.vertex}" data-orientation="{c.orientation}"/>')
        out.append(
            f'<text x="{px(c.anchor_x)}" y="{py(c.anchor_y) - 4}" font-size="{max(scale - 2, 6)}" '
            f'text-anchor="middle" font-family="monospace">{c.vertex}</text>'
        )
    if mark_crossings and rep.curves:
        by_v = {c.vertex: c for c in rep.curves}
        dots = set()
        for a, b in crossings(rep):
            for h_, v_ in ((by_v[a], by_v[b]), (by_v[b], by_v[a])):
                lo, hi = sorted((h_.anchor_x, h_.tip_x))
                if lo < v_.anchor_x < hi and min(v_.anchor_y, v_.depth_y) < h_.depth_y < max(v_.anchor_y, v_.depth_y):
                    dots.add((v_.anchor_x, h_.depth_y))
        for x, y in sorted(dots):
            out.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="2" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
