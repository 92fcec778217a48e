"""Brute-force core numbers by repeated deletion. Test support only.

Nothing here is fast: every degree is recounted by scanning the full line
list, so that the reference shares no machinery with the bucket engine.
"""

from __future__ import annotations

from .decompose import CoreAssignment
from .graph import DegreeMode, Graph


def _degrees_within(lines, alive, mode):
    # Degree of every surviving vertex, counting only lines whose other
    # endpoint also survives.
    deg = {v: 0 for v in alive}
    for u, v in lines:
        if u not in alive or v not in alive:
            continue
        if mode is DegreeMode.UNDIRECTED:
            deg[u] += 1
            deg[v] += 1
        elif mode is DegreeMode.OUT:
            deg[u] += 1
        elif mode is DegreeMode.IN:
            deg[v] += 1
        else:
            deg[u] += 1
            deg[v] += 1
    return deg


def _delete_below(lines, alive, k, mode):
    alive = set(alive)
    while True:
        deg = _degrees_within(lines, alive, mode)
        doomed = {v for v in alive if deg[v] < k}
        if not doomed:
            return alive
        alive -= doomed


def peel_oracle(g: Graph, mode: DegreeMode) -> CoreAssignment:
    g.check_mode(mode)
    lines = g.lines()
    core = [0] * g.n
    alive = set(range(g.n))
    k = 0
    while alive:
        # Cores are nested, so level k may start from the level k-1 survivors.
        alive = _delete_below(lines, alive, k, mode)
        for v in alive:
            core[v] = k
        k += 1
    return CoreAssignment(tuple(core), mode)


def is_k_core(g: Graph, W, k: int, mode: DegreeMode) -> bool:
    """True iff ``W`` induces a subgraph of min mode-degree ``k`` and is maximal with it."""
    g.check_mode(mode)
    lines = g.lines()
    W = set(W)
    deg = _degrees_within(lines, W, mode)
    if any(d < k for d in deg.values()):
        return False
    return W == _delete_below(lines, range(g.n), k, mode)
