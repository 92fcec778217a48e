"""Scaling measurements for the decomposition on uniform random graphs."""

from __future__ import annotations

import time
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .decompose import core_decompose
from .graph import Graph, build_graph

DEFAULT_SEED = 20011924
DEFAULT_N = 100_000
DEFAULT_M_LADDER = (500_000, 1_000_000, 2_000_000, 4_000_000)
DEFAULT_N_LADDER = (12_500, 25_000, 50_000, 100_000)
DEFAULT_AVG_DEGREE = 10


class BenchRow(NamedTuple):
    series: str
    n: int
    m: int
    seconds: float
    ratio: Optional[float]


def random_graph(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Uniform simple graph with exactly ``m`` edges, sampled with rejection."""
    possible = n * (n - 1) // 2
    if m > possible:
        raise ValueError(f"{m} edges do not fit on {n} vertices")
    if m == 0:
        return build_graph(n, [])
    keys = np.zeros(0, dtype=np.int64)
    while len(keys) < m:
        want = int((m - len(keys)) * 1.1) + 16
        pairs = rng.integers(0, n, size=(want, 2))
        lo, hi = pairs.min(axis=1), pairs.max(axis=1)
        fresh = lo[lo != hi] * n + hi[lo != hi]
        keys = np.unique(np.concatenate([keys, fresh]))
    keys = rng.permutation(keys)[:m]
    return build_graph(n, np.stack([keys // n, keys % n], axis=1))


def time_decomposition(g: Graph, repeats: int = 1) -> float:
    best = float("inf")
    for _ in range(max(repeats, 1)):
        t0 = time.perf_counter()
        core_decompose(g)
        best = min(best, time.perf_counter() - t0)
    return best


def _ladder(series: str, sizes: Sequence[tuple[int, int]], rng, repeats: int) -> list[BenchRow]:
    rows: list[BenchRow] = []
    for n, m in sizes:
        g = random_graph(n, m, rng)
        seconds = time_decomposition(g, repeats)
        prev = rows[-1].seconds if rows else None
        ratio = seconds / prev if prev else None
        rows.append(BenchRow(series, n, m, seconds, ratio))
    return rows


def run_bench(
    n: int = DEFAULT_N,
    m_ladder: Sequence[int] = DEFAULT_M_LADDER,
    n_ladder: Sequence[int] = DEFAULT_N_LADDER,
    avg_degree: int = DEFAULT_AVG_DEGREE,
    seed: int = DEFAULT_SEED,
    repeats: int = 3,
) -> list[BenchRow]:
    """Time the decomposition over a ladder of m at fixed n, then of n at fixed average degree.

    Each timing is the best of ``repeats`` runs; ``ratio`` is the time
    relative to the previous size in the same series.
    """
    rng = np.random.default_rng(seed)
    rows = _ladder("m", [(n, m) for m in m_ladder], rng, repeats)
    rows += _ladder("n", [(k, k * avg_degree // 2) for k in n_ladder], rng, repeats)
    return rows


def format_csv(rows: Sequence[BenchRow]) -> str:
    out = ["series,n,m,seconds,ratio"]
    for r in rows:
        ratio = "" if r.ratio is None else f"{r.ratio:.4f}"
        out.append(f"{r.series},{r.n},{r.m},{r.seconds:.6f},{ratio}")
    return "\n".join(out) + "\n"


def format_table(rows: Sequence[BenchRow]) -> str:
    out = [f"{'series':<7}{'n':>10}{'m':>12}{'seconds':>12}{'ratio':>8}"]
    for r in rows:
        ratio = "-" if r.ratio is None else f"{r.ratio:.2f}"
        out.append(f"{r.series:<7}{r.n:>10}{r.m:>12}{r.seconds:>12.4f}{ratio:>8}")
    return "\n".join(out) + "\n"
