"""Pajek networks and partitions, plain edge lists, and word graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO, Union

from .decompose import CoreAssignment
from .graph import Graph, GraphInputError, build_graph

__all__ = [
    "LabeledGraph",
    "ParseError",
    "parse_edgelist",
    "parse_pajek",
    "word_graph",
    "write_clu",
    "write_edgelist",
    "write_pajek",
]

Text = Union[str, TextIO, Iterable[str]]

_VERTEX_LINE = re.compile(r'\s*(\S+)(?:\s+(?:"([^"]*)"|(\S+)))?')


class ParseError(GraphInputError):
    def __init__(self, message: str, lineno: Optional[int] = None) -> None:
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.labels is not None and len(self.labels) != self.graph.n:
            raise ValueError(f"{len(self.labels)} labels for {self.graph.n} vertices")


def _lines(text: Text) -> Iterable[str]:
    if isinstance(text, str):
        # not splitlines(): labels may legally hold other line-break characters
        return text.split("\n")
    return text


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_pajek(text: Text) -> LabeledGraph:
    """Read a Pajek ``.net`` file with ``*Vertices``, ``*Edges`` and ``*Arcs`` sections.

    Vertex ids are one-based in the file and zero-based in the result. If
    both ``*Edges`` and ``*Arcs`` occur, the graph is directed and every
    edge becomes a pair of opposite arcs.
    """
    n: Optional[int] = None
    labels: Optional[list[str]] = None
    section: Optional[str] = None
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    seen_arcs = False

    for lineno, raw in enumerate(_lines(text), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            head, *rest = line.split()
            keyword = head.lower()
            if keyword == "*vertices":
                if n is not None:
                    raise ParseError("repeated *Vertices header", lineno)
                if not rest or len(rest) > 2:
                    raise ParseError("*Vertices needs a vertex count", lineno)
                n = _int(rest[0], lineno)
                if len(rest) == 2:
                    _int(rest[1], lineno)
                if n < 0:
                    raise ParseError(f"negative vertex count {n}", lineno)
                section = "vertices"
            elif keyword in ("*edges", "*arcs"):
                if n is None:
                    raise ParseError(f"{head} before *Vertices", lineno)
                section = keyword[1:]
                seen_arcs |= section == "arcs"
            elif keyword == "*network":
                continue
            else:
                raise ParseError(f"unsupported section {head}", lineno)
            continue

        if section is None:
            raise ParseError("data before *Vertices header", lineno)
        if section == "vertices":
            match = _VERTEX_LINE.match(line)
            v = _int(match.group(1), lineno)
            if not 1 <= v <= n:
                raise ParseError(f"vertex id {v} out of range [1, {n}]", lineno)
            if labels is None:
                labels = [""] * n
            label = match.group(2) if match.group(2) is not None else match.group(3)
            labels[v - 1] = label or ""
            continue

        tokens = line.split()
        if len(tokens) < 2:
            raise ParseError(f"expected two vertex ids, got {line!r}", lineno)
        u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
        for x in (u, v):
            if not 1 <= x <= n:
                raise ParseError(f"vertex id {x} out of range [1, {n}]", lineno)
        (arcs if section == "arcs" else edges).append((u - 1, v - 1))

    if n is None:
        raise ParseError("missing *Vertices header")
    if seen_arcs:
        lines = arcs + edges + [(v, u) for u, v in edges]
        graph = build_graph(n, lines, directed=True)
    else:
        graph = build_graph(n, edges, directed=False)
    return LabeledGraph(graph, tuple(labels) if labels is not None else None)


def write_pajek(lg: LabeledGraph) -> str:
    g = lg.graph
    out = [f"*Vertices {g.n}"]
    if lg.labels is not None:
        for i, label in enumerate(lg.labels, start=1):
            if '"' in label or "\n" in label or "\r" in label:
                raise ValueError(f"label of vertex {i} cannot be written: {label!r}")
            out.append(f'{i} "{label}"')
    out.append("*Arcs" if g.directed else "*Edges")
    out.extend(f"{u + 1} {v + 1}" for u, v in g.lines())
    return "\n".join(out) + "\n"


def parse_edgelist(text: Text, directed: bool = False, vertices: Optional[int] = None) -> Graph:
    """Read whitespace-separated zero-based ``u v`` pairs, one per line.

    Blank lines and lines starting with ``#`` are skipped; further tokens on
    a line are ignored. The vertex count is ``vertices`` when given,
    otherwise one more than the largest id seen.
    """
    lines = []
    top = -1
    for lineno, raw in enumerate(_lines(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise ParseError(f"expected two vertex ids, got {line!r}", lineno)
        u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
        if u < 0 or v < 0:
            raise ParseError("vertex ids must be non-negative", lineno)
        if vertices is not None and max(u, v) >= vertices:
            raise ParseError(f"vertex id {max(u, v)} not below --vertices {vertices}", lineno)
        top = max(top, u, v)
        lines.append((u, v))
    n = vertices if vertices is not None else top + 1
    return build_graph(n, lines, directed=directed)


def write_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.lines())


def write_clu(assignment: CoreAssignment) -> str:
    """Core numbers as a Pajek partition, one value per vertex."""
    body = "".join(f"{c}\n" for c in assignment.core)
    return f"*Vertices {len(assignment.core)}\n{body}"


def word_graph(words: Sequence[str], min_len: int = 2, max_len: int = 8) -> LabeledGraph:
    """Graph on words joined when one substitution, insertion or deletion separates them.

    Words outside ``min_len..max_len`` characters are dropped. Rather than
    comparing all pairs, every word is keyed by its one-letter deletions:
    two equal-length words differ in exactly position ``i`` iff they share
    the key ``(i, word without letter i)``, and a word is one insertion away
    from another iff one of its deletions is that word.
    """
    seen = set()
    for w in words:
        if w in seen:
            raise GraphInputError(f"duplicate word {w!r}")
        seen.add(w)
    kept = [w for w in words if min_len <= len(w) <= max_len]
    index = {w: i for i, w in enumerate(kept)}

    lines = []
    buckets: dict[tuple[int, str], list[int]] = {}
    for i, w in enumerate(kept):
        for p in range(len(w)):
            shorter = w[:p] + w[p + 1:]
            j = index.get(shorter)
            if j is not None:
                lines.append((i, j))
            buckets.setdefault((p, shorter), []).append(i)
    for group in buckets.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                lines.append((group[a], group[b]))
    return LabeledGraph(build_graph(len(kept), lines), tuple(kept))
