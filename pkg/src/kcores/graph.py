"""Immutable simple graphs stored as flat neighbor tables (CSR layout)."""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "DegreeMode",
    "Graph",
    "GraphInputError",
    "LoopPolicy",
    "ModeError",
    "build_graph",
    "degree",
    "neighbors",
]


class GraphInputError(ValueError):
    """Raised when the data a graph is built from is invalid."""


class ModeError(ValueError):
    """Raised when a degree mode does not fit the graph's directedness."""


class DegreeMode(enum.Enum):
    UNDIRECTED = "undirected"
    IN = "in"
    OUT = "out"
    INOUT = "inout"

    @property
    def directed(self) -> bool:
        return self is not DegreeMode.UNDIRECTED


class LoopPolicy(enum.Enum):
    REJECT = "reject"
    IGNORE = "ignore"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


def _csr(n: int, src: np.ndarray, dst: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # (src, dst) pairs must be unique; sorting the combined key orders
    # each neighbor list ascending.
    key = np.sort(src * max(n, 1) + dst)
    src_sorted = key // max(n, 1)
    idx = key - src_sorted * max(n, 1)
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src_sorted, minlength=n), out=ptr[1:])
    return _frozen(ptr), _frozen(idx)


class Graph:
    """A simple graph on vertices ``0 .. n-1``.

    Neighbors of ``v`` live in ``out_idx[out_ptr[v]:out_ptr[v+1]]``. For
    directed graphs the reverse adjacency is kept in ``in_ptr``/``in_idx``;
    for undirected graphs both pairs are the same arrays. Instances are
    read-only and safe to share between threads.
    """

    __slots__ = ("n", "m", "directed", "out_ptr", "out_idx", "in_ptr", "in_idx", "ignored_loops")

    def __init__(
        self,
        n: int,
        m: int,
        directed: bool,
        out_ptr: np.ndarray,
        out_idx: np.ndarray,
        in_ptr: np.ndarray,
        in_idx: np.ndarray,
        ignored_loops: int = 0,
    ) -> None:
        self.n = n
        self.m = m
        self.directed = directed
        self.out_ptr = out_ptr
        self.out_idx = out_idx
        self.in_ptr = in_ptr
        self.in_idx = in_idx
        self.ignored_loops = ignored_loops

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and self.directed == other.directed
            and np.array_equal(self.out_ptr, other.out_ptr)
            and np.array_equal(self.out_idx, other.out_idx)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def default_mode(self) -> DegreeMode:
        return DegreeMode.INOUT if self.directed else DegreeMode.UNDIRECTED

    @property
    def density(self) -> float:
        """Lines present over lines possible; 0.0 when fewer than two vertices."""
        if self.n < 2:
            return 0.0
        possible = self.n * (self.n - 1)
        if not self.directed:
            possible //= 2
        return self.m / possible

    def lines(self) -> list[tuple[int, int]]:
        """Every line once, sorted; undirected edges are reported as ``(u, v)`` with ``u < v``."""
        ptr = self.out_ptr.tolist()
        idx = self.out_idx.tolist()
        out = []
        for u in range(self.n):
            for v in idx[ptr[u]:ptr[u + 1]]:
                if self.directed or u < v:
                    out.append((u, v))
        return out

    def check_mode(self, mode: DegreeMode) -> None:
        if mode.directed != self.directed:
            kind = "directed" if self.directed else "undirected"
            raise ModeError(f"degree mode {mode.value!r} cannot be used on a {kind} graph")


def build_graph(
    n: int,
    lines: Iterable[Sequence[int]] | np.ndarray,
    directed: bool = False,
    loop_policy: LoopPolicy = LoopPolicy.IGNORE,
) -> Graph:
    """Build a simple graph from ``(u, v)`` pairs with zero-based endpoints.

    Repeated lines collapse to one (for undirected graphs ``(u, v)`` and
    ``(v, u)`` are the same line). Self-loops are dropped and counted in
    ``Graph.ignored_loops`` or rejected, depending on ``loop_policy``.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    arr = np.asarray(lines if isinstance(lines, np.ndarray) else list(lines), dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphInputError("lines must be pairs of vertex ids")

    bad = np.flatnonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))
    if bad.size:
        i = int(bad[0])
        u, v = arr[i].tolist()
        raise GraphInputError(f"line {i} ({u}, {v}) has an endpoint outside [0, {n})")

    src, dst = arr[:, 0], arr[:, 1]
    loops = src == dst
    n_loops = int(loops.sum())
    if n_loops:
        if loop_policy is LoopPolicy.REJECT:
            i = int(np.flatnonzero(loops)[0])
            raise GraphInputError(f"line {i} ({int(src[i])}, {int(dst[i])}) is a self-loop")
        src, dst = src[~loops], dst[~loops]

    scale = max(n, 1)
    if directed:
        key = np.unique(src * scale + dst)
        src, dst = key // scale, key % scale
        out_ptr, out_idx = _csr(n, src, dst)
        in_ptr, in_idx = _csr(n, dst, src)
        return Graph(n, len(key), True, out_ptr, out_idx, in_ptr, in_idx, n_loops)

    lo, hi = np.minimum(src, dst), np.maximum(src, dst)
    key = np.unique(lo * scale + hi)
    lo, hi = key // scale, key % scale
    ptr, idx = _csr(n, np.concatenate([lo, hi]), np.concatenate([hi, lo]))
    return Graph(n, len(key), False, ptr, idx, ptr, idx, n_loops)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} is outside [0, {g.n})")


def degree(g: Graph, v: int, mode: DegreeMode) -> int:
    g.check_mode(mode)
    _check_vertex(g, v)
    out_deg = int(g.out_ptr[v + 1] - g.out_ptr[v])
    if mode is DegreeMode.UNDIRECTED or mode is DegreeMode.OUT:
        return out_deg
    in_deg = int(g.in_ptr[v + 1] - g.in_ptr[v])
    if mode is DegreeMode.IN:
        return in_deg
    return out_deg + in_deg


def neighbors(g: Graph, v: int, mode: DegreeMode) -> tuple[int, ...]:
    """Mode-relevant neighbors of ``v`` in ascending order.

    For ``INOUT`` this is the out-neighbors followed by the in-neighbors, so
    a reciprocal pair of arcs yields the other endpoint twice.
    """
    g.check_mode(mode)
    _check_vertex(g, v)
    out = g.out_idx[g.out_ptr[v]:g.out_ptr[v + 1]]
    if mode is DegreeMode.UNDIRECTED or mode is DegreeMode.OUT:
        return tuple(out.tolist())
    inc = g.in_idx[g.in_ptr[v]:g.in_ptr[v + 1]]
    if mode is DegreeMode.IN:
        return tuple(inc.tolist())
    return tuple(out.tolist()) + tuple(inc.tolist())
