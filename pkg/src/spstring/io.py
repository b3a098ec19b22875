"""Graph and representation file formats.

Graphs are read either as a plain edge list (``n m`` on the first line, then
``m`` lines ``u v``; blank lines and ``#`` comments are ignored) or as a JSON
object ``{"n": ..., "edges": [[u, v], ...]}``.  Representations are JSON lists
of curve records.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphFormatError, RepresentationFormatError
from .geometry import L, ML, GroundedCurve, Representation
from .graph import Graph

# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------


def _int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"{what} {tok!r} is not an integer", line) from None


def parse_graph(text: str) -> Graph:
    if text.lstrip().startswith("{"):
        return _parse_graph_json(text)
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise GraphFormatError("empty graph file", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    n, m = (_int(tok, lineno, "header field") for tok in head)
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", lineno)
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, file has {len(rows) - 1}", rows[-1][0])
    edges = []
    seen = set()
    for lineno, body in rows[1:]:
        if len(body) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        u, v = (_int(tok, lineno, "vertex id") for tok in body)
        _check_edge(u, v, n, seen, lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _check_edge(u: int, v: int, n: int, seen: set, lineno: int | None) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}", lineno)
    if u == v:
        raise GraphFormatError(f"self-loop at {u}", lineno)
    key = (min(u, v), max(u, v))
    if key in seen:
        raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
    seen.add(key)


def _parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(e.msg, e.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError("JSON graph must be an object with 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError("'n' must be a non-negative integer")
    edges, seen = [], set()
    for i, e in enumerate(obj["edges"]):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise GraphFormatError(f"edges[{i}] must be a pair of integers")
        _check_edge(e[0], e[1], n, seen, None)
        edges.append(tuple(e))
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_graph_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

_FIELDS = ("vertex", "orientation", "anchor_x", "depth_y", "tip_x")


def parse_representation(text: str) -> Representation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise RepresentationFormatError(e.msg, e.lineno) from None
    if not isinstance(obj, list):
        raise RepresentationFormatError("representation must be a JSON list of curve records")
    curves = []
    for i, rec in enumerate(obj):
        if not isinstance(rec, dict):
            raise RepresentationFormatError(f"record {i} is not an object")
        missing = [f for f in _FIELDS if f not in rec]
        if missing:
            raise RepresentationFormatError(f"record {i} lacks {', '.join(missing)}")
        unknown = set(rec) - set(_FIELDS) - {"anchor_y"}
        if unknown:
            raise RepresentationFormatError(f"record {i} has unknown fields {sorted(unknown)}")
        if rec["orientation"] not in (L, ML):
            raise RepresentationFormatError(f"record {i}: orientation must be 'L' or 'ML'")
        nums = {k: v for k, v in rec.items() if k != "orientation"}
        for k, v in nums.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise RepresentationFormatError(f"record {i}: {k} must be an integer")
        curves.append(GroundedCurve(**rec))
    if len({c.vertex for c in curves}) != len(curves):
        raise RepresentationFormatError("a vertex has more than one curve")
    return Representation.of(curves)


def format_representation(rep: Representation) -> str:
    rows = []
    for c in rep.curves:
        rec = {f: getattr(c, f) for f in _FIELDS}
        if c.anchor_y:
            rec["anchor_y"] = c.anchor_y
        rows.append("  " + json.dumps(rec))
    if not rows:
        return "[]\n"
    return "[\n" + ",\n".join(rows) + "\n]\n"


def read_representation(path: str | Path) -> Representation:
    return parse_representation(Path(path).read_text(encoding="utf-8"))


def write_representation(rep: Representation, path: str | Path) -> None:
    Path(path).write_text(format_representation(rep), encoding="utf-8", newline="\n")
