"""Wall-clock timing of the linear-time decision on growing inputs."""

from __future__ import annotations

import gc
import time
from dataclasses import dataclass

from .corpus import cycle, sp_random
from .graph import Graph
from .heaviness import decide

DEFAULT_SIZES = (10, 125_000, 250_000, 500_000, 1_000_000)


@dataclass
class BenchRow:
    family: str
    n: int
    seconds: float
    ratio: float | None
    verdict: bool


def make_graph(family: str, n: int, seed: int = 0) -> Graph:
    if family == "cycle":
        return cycle(n)
    if family == "sp-random":
        return sp_random(n, seed)
    raise ValueError(f"unknown bench family {family!r}; expected cycle or sp-random")


def time_decide(g: Graph, repeats: int = 1) -> tuple[float, bool]:
    """Best of ``repeats`` runs with the garbage collector paused during each."""
    best = float("inf")
    verdict = False
    for _ in range(repeats):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            verdict = decide(g).at_most_2_heavy
            best = min(best, time.perf_counter() - t0)
        finally:
            gc.enable()
    return best, verdict


def run_bench(family: str, sizes=DEFAULT_SIZES, seed: int = 0) -> list[BenchRow]:
    """Time ``decide`` per size; ``ratio`` compares against the previous row."""
    rows: list[BenchRow] = []
    for n in sizes:
        g = make_graph(family, n, seed)
        secs, verdict = time_decide(g, repeats=5 if n <= 10_000 else 1)
        del g
        prev = rows[-1] if rows else None
        ratio = secs / prev.seconds if prev and prev.n * 2 == n and prev.seconds > 0 else None
        rows.append(BenchRow(family, n, secs, ratio, verdict))
    return rows


def format_rows(rows: list[BenchRow]) -> str:
    lines = [f"{'family':<10} {'n':>9} {'seconds':>10} {'ratio':>6}  verdict"]
    for r in rows:
        ratio = f"{r.ratio:6.2f}" if r.ratio is not None else f"{'-':>6}"
        lines.append(f"{r.family:<10} {r.n:>9} {r.seconds:>10.4f} {ratio}  {'<=2-heavy' if r.verdict else '>=3-heavy'}")
    return "\n".join(lines) + "\n"
