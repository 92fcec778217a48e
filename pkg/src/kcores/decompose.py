"""Linear-time core decomposition by bucket peeling.

The vertices are bin-sorted by degree into ``vert``; ``pos`` is its inverse
and ``bin[d]`` is the position of the first vertex of degree ``d``. Taking
vertices left to right, each neighbor ``u`` of higher degree is moved one
bucket to the left by swapping it with the first vertex of its bucket and
advancing that bucket's start. Every step is O(1), so the whole run is
O(n + m).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

from .graph import DegreeMode, Graph, build_graph

__all__ = [
    "CoreAssignment",
    "CoreSummary",
    "PeelState",
    "SummaryRow",
    "check_peel_invariants",
    "core_decompose",
    "k_core_subgraph",
    "k_core_vertices",
    "peel",
    "summarize",
]


@dataclass(frozen=True)
class CoreAssignment:
    core: tuple[int, ...]
    mode: DegreeMode

    def __len__(self) -> int:
        return len(self.core)

    @property
    def main_core(self) -> int:
        """Order of the main core; 0 for the empty graph."""
        return max(self.core, default=0)


@dataclass
class PeelState:
    """Working arrays of one decomposition run.

    Positions are zero-based: ``vert[pos[v]] == v`` and ``bin[0]`` starts
    at 0. After the run ``deg`` holds the core numbers.
    """

    deg: list[int]
    vert: list[int]
    pos: list[int]
    bin: list[int]
    md: int


def _update_sources(g: Graph, mode: DegreeMode):
    # Removing v lowers the mode-degree of the vertices whose degree counts
    # v: for in-degree those are v's out-neighbors, and vice versa.
    out = (g.out_ptr.tolist(), g.out_idx.tolist())
    if mode is DegreeMode.UNDIRECTED:
        return [out]
    inc = (g.in_ptr.tolist(), g.in_idx.tolist())
    if mode is DegreeMode.IN:
        return [out]
    if mode is DegreeMode.OUT:
        return [inc]
    return [out, inc]


def _initial_degrees(g: Graph, mode: DegreeMode) -> list[int]:
    out_deg = np.diff(g.out_ptr)
    if mode is DegreeMode.UNDIRECTED or mode is DegreeMode.OUT:
        return out_deg.tolist()
    in_deg = np.diff(g.in_ptr)
    if mode is DegreeMode.IN:
        return in_deg.tolist()
    return (out_deg + in_deg).tolist()


def peel(
    g: Graph,
    mode: Optional[DegreeMode] = None,
    observer: Optional[Callable[[int, PeelState], None]] = None,
) -> PeelState:
    """Run the bucket peeling and return its final state.

    ``observer(i, state)`` is called before the ``i``-th vertex of ``vert``
    is processed; it is meant for debugging and costs nothing when unset.
    """
    mode = g.default_mode if mode is None else mode
    g.check_mode(mode)
    n = g.n
    sources = _update_sources(g, mode)

    deg = _initial_degrees(g, mode)
    md = max(deg, default=0)
    # in+out degree is bounded by 2n-2, so 2n-1 buckets always suffice
    size = 2 * n - 1 if mode is DegreeMode.INOUT else md + 1
    bin_ = [0] * max(size, md + 1)

    for v in range(n):
        bin_[deg[v]] += 1
    start = 0
    for d in range(md + 1):
        num = bin_[d]
        bin_[d] = start
        start += num
    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bin_[deg[v]]
        vert[pos[v]] = v
        bin_[deg[v]] += 1
    for d in range(md, 0, -1):
        bin_[d] = bin_[d - 1]
    bin_[0] = 0

    state = PeelState(deg, vert, pos, bin_, md)
    for i in range(n):
        if observer is not None:
            observer(i, state)
        v = vert[i]
        dv = deg[v]
        for ptr, idx in sources:
            for u in idx[ptr[v]:ptr[v + 1]]:
                if deg[u] > dv:
                    du = deg[u]
                    pu = pos[u]
                    pw = bin_[du]
                    w = vert[pw]
                    if u != w:
                        pos[u] = pw
                        vert[pu] = w
                        pos[w] = pu
                        vert[pw] = u
                    bin_[du] += 1
                    deg[u] = du - 1
    return state


def check_peel_invariants(i: int, state: PeelState) -> None:
    """Assert the bucket invariants at the top of main-loop step ``i``.

    Checks that ``pos`` inverts ``vert``, that the unprocessed suffix is
    sorted by working degree, and that for every degree ``d`` above the
    current level ``bin[d]`` is the first suffix position of degree >= d.
    """
    deg, vert, pos, bin_ = state.deg, state.vert, state.pos, state.bin
    n = len(vert)
    for p in range(n):
        if pos[vert[p]] != p:
            raise AssertionError(f"step {i}: pos[vert[{p}]] = {pos[vert[p]]}")
    for p in range(i + 1, n):
        if deg[vert[p - 1]] > deg[vert[p]]:
            raise AssertionError(f"step {i}: suffix unsorted at position {p}")
    level = deg[vert[i]]
    first = i
    for d in range(state.md + 1):
        if d <= level:
            if bin_[d] > i:
                raise AssertionError(f"step {i}: bin[{d}] = {bin_[d]} is ahead of the cursor")
            continue
        while first < n and deg[vert[first]] < d:
            first += 1
        if bin_[d] != first:
            raise AssertionError(f"step {i}: bin[{d}] = {bin_[d]}, expected {first}")


def core_decompose(g: Graph, mode: Optional[DegreeMode] = None, debug: bool = False) -> CoreAssignment:
    """Core number of every vertex under ``mode`` (defaults to the graph's natural mode).

    With ``debug=True`` the bucket invariants are verified at every step,
    which makes the run quadratic.
    """
    mode = g.default_mode if mode is None else mode
    state = peel(g, mode, check_peel_invariants if debug else None)
    return CoreAssignment(tuple(state.deg), mode)


def k_core_vertices(assignment: CoreAssignment, k: int) -> frozenset[int]:
    return frozenset(v for v, c in enumerate(assignment.core) if c >= k)


def k_core_subgraph(g: Graph, assignment: CoreAssignment, k: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the ``k``-core, relabeled densely.

    Returns the subgraph and a tuple mapping each new vertex id to the
    original one.
    """
    core = np.asarray(assignment.core, dtype=np.int64).reshape(-1)
    keep = core >= k
    old_ids = np.flatnonzero(keep)
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[old_ids] = np.arange(len(old_ids))

    src = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(g.out_ptr))
    dst = np.asarray(g.out_idx)
    sel = keep[src] & keep[dst] if g.n else np.zeros(0, dtype=bool)
    if not g.directed:
        sel &= src < dst
    lines = np.stack([new_id[src[sel]], new_id[dst[sel]]], axis=1)
    sub = build_graph(len(old_ids), lines, directed=g.directed)
    return sub, tuple(old_ids.tolist())


class SummaryRow(NamedTuple):
    k: int
    count: int
    percent: float
    cumulative: int
    cumulative_percent: float


@dataclass(frozen=True)
class CoreSummary:
    n: int
    rows: tuple[SummaryRow, ...]

    def format_table(self) -> str:
        header = f"{'k':>5} {'#':>10} {'%':>9} {'k-core #':>10} {'k-core %':>9}"
        lines = [header]
        for r in self.rows:
            lines.append(
                f"{r.k:>5} {r.count:>10} {r.percent:>9.3f} {r.cumulative:>10} {r.cumulative_percent:>9.3f}"
            )
        return "\n".join(lines) + "\n"


def summarize(assignment: CoreAssignment) -> CoreSummary:
    """Per-k vertex counts and k-core sizes, highest k first."""
    n = len(assignment.core)
    counts: dict[int, int] = {}
    for c in assignment.core:
        counts[c] = counts.get(c, 0) + 1
    rows = []
    cumulative = 0
    for k in sorted(counts, reverse=True):
        cumulative += counts[k]
        rows.append(SummaryRow(k, counts[k], 100 * counts[k] / n, cumulative, 100 * cumulative / n))
    return CoreSummary(n, tuple(rows))
