"""Command-line interface.

Exit codes: 0 representable (or check passed), 1 not representable (or check
failed), 2 input outside the supported class or unreadable.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import DEFAULT_SIZES, format_rows, run_bench
from .construct import construct_representation
from .corpus import FAMILIES, generate
from .decomposition import build_decomposition_tree
from .errors import (
    InstanceTooLarge,
    NotBiconnected,
    NotSeriesParallel,
    ParseError,
    SPStringError,
    TooHeavy,
    TransitiveEdgesPresent,
    VertexMismatch,
)
from .geometry import verify
from .graph import is_biconnected
from .heaviness import check_two_heavy
from .io import format_graph, format_representation, read_graph, read_representation, write_graph
from .oracle import DEFAULT_MAX_N, oracle_heaviness
from .svg import render_svg

EXIT_YES, EXIT_NO, EXIT_OUT = 0, 1, 2


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _err(text: str) -> None:
    sys.stderr.write(f"error: {text}\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    bic = is_biconnected(g)
    _out(f"biconnected: {'yes' if bic else 'no'}")
    if not bic:
        return EXIT_OUT
    try:
        t = build_decomposition_tree(g, check_biconnected=False)
    except NotSeriesParallel:
        _out("series-parallel: no (NotSeriesParallel)")
        return EXIT_OUT
    _out("series-parallel: yes")
    rep = check_two_heavy(t)
    trans = sorted(rep.transitive_edges)
    _out(f"transitive edges: {' '.join(f'{u}-{v}' for u, v in trans) if trans else 'none'}")
    _out(f"max heavy components at a separation pair: {rep.max_heavy}")
    if rep.at_most_2_heavy:
        _out("verdict: at most 2-heavy")
    else:
        w = rep.witness
        _out(f"verdict: not 2-heavy; witness P-node {w.node} poles {w.poles[0]} {w.poles[1]} lengths {' '.join(map(str, w.lengths))}")
    if trans:
        _out("note: transitive edges present; the verdict does not decide representability")
        return EXIT_OUT
    return EXIT_YES if rep.at_most_2_heavy else EXIT_NO


def cmd_build(args) -> int:
    g = read_graph(args.graph)
    try:
        rep = construct_representation(g)
    except TooHeavy as e:
        _err(str(e))
        return EXIT_NO
    except (NotBiconnected, NotSeriesParallel, TransitiveEdgesPresent) as e:
        _err(f"{type(e).__name__}: {e}")
        return EXIT_OUT
    text = format_representation(rep)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    if args.svg:
        Path(args.svg).write_text(render_svg(rep, args.scale), encoding="utf-8", newline="\n")
    return EXIT_YES


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    rep = read_representation(args.rep)
    report = verify(g, rep, args.mode)
    for line in report.lines():
        _out(line)
    return EXIT_YES if report.ok else EXIT_NO


def cmd_gen(args) -> int:
    try:
        graphs = generate(args.family, args.params, args.seed)
    except (ValueError, IndexError) as e:
        _err(f"bad parameters for {args.family}: {e}")
        return EXIT_OUT
    if args.out is None:
        sys.stdout.write("\n".join(format_graph(g) for g in graphs))
    elif len(graphs) == 1 and not Path(args.out).is_dir():
        write_graph(graphs[0], args.out)
    else:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(graphs):
            write_graph(g, out / f"{args.family}-{i:05d}.txt")
    return EXIT_YES


def cmd_bench(args) -> int:
    sizes = args.sizes or list(DEFAULT_SIZES)
    try:
        rows = run_bench(args.family, sizes, args.seed)
    except ValueError as e:
        _err(str(e))
        return EXIT_OUT
    sys.stdout.write(format_rows(rows))
    return EXIT_YES


def cmd_oracle(args) -> int:
    g = read_graph(args.graph)
    try:
        w = oracle_heaviness(g, args.max_n)
    except InstanceTooLarge as e:
        _err(str(e))
        return EXIT_OUT
    pair = f"{w.pair.s} {w.pair.t}" if w.pair else "none"
    _out(f"max heavy components: {w.k} (pair {pair})")
    return EXIT_YES if w.k <= 2 else EXIT_NO


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spstring", description="Outerstring test and grounded L/mirrored-L drawings for series-parallel graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether the graph is at most 2-heavy")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", help="construct and verify a representation")
    p.add_argument("graph")
    p.add_argument("--out", help="representation file (default: stdout)")
    p.add_argument("--svg", help="also write an SVG drawing")
    p.add_argument("--scale", type=int, default=12, help="SVG pixels per grid unit")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check a representation against a graph")
    p.add_argument("graph")
    p.add_argument("rep")
    p.add_argument("--mode", choices=("LL", "Lonly"), default="LL")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write graphs from a built-in family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file, or directory for several graphs (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the decision on growing inputs")
    p.add_argument("family", choices=("cycle", "sp-random"))
    p.add_argument("sizes", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="brute-force heaviness of a small graph")
    p.add_argument("graph")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, VertexMismatch, OSError) as e:
        _err(f"{type(e).__name__}: {e}")
        return EXIT_OUT
    except SPStringError as e:
        _err(f"{type(e).__name__}: {e}")
        return EXIT_OUT


if __name__ == "__main__":
    sys.exit(main())
