"""Command-line front end: ``kcores decompose | wordgraph | bench``."""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
import time
from pathlib import Path
from typing import Optional, Sequence

from . import bench
from .decompose import core_decompose, k_core_subgraph, summarize
from .graph import DegreeMode, GraphInputError, ModeError
from .io import LabeledGraph, parse_edgelist, parse_pajek, word_graph, write_clu, write_pajek

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2

PAJEK_SUFFIXES = {".net", ".paj"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kcores", description="Core decomposition of large networks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    dec = sub.add_parser("decompose", help="compute core numbers of a network")
    dec.add_argument("--input", required=True, help="network file (.net Pajek or edge list)")
    dec.add_argument("--format", choices=["auto", "pajek", "edgelist"], default="auto")
    dec.add_argument(
        "--mode",
        choices=["auto", "undirected", "in", "out", "inout"],
        default="auto",
        help="degree notion; for edge lists a directed mode also reads the lines as arcs",
    )
    dec.add_argument("--output", help="write core numbers as a Pajek .clu partition")
    dec.add_argument("--summary", action="store_true", help="print the core-size table")
    dec.add_argument("--kcore", type=int, metavar="K", help="extract the K-core subgraph")
    dec.add_argument("--subgraph-output", help="Pajek file for the --kcore subgraph")
    dec.add_argument("--vertices", type=int, metavar="N", help="vertex count for edge lists")

    wg = sub.add_parser("wordgraph", help="build the edit-distance-one graph of a word list")
    wg.add_argument("--input", required=True, help="one word per line")
    wg.add_argument("--output", help="Pajek file (default: standard output)")

    bn = sub.add_parser("bench", help="time the decomposition on random graphs")
    bn.add_argument("--seed", type=int, default=bench.DEFAULT_SEED)
    bn.add_argument("--vertices", type=int, metavar="N", default=bench.DEFAULT_N,
                    help="vertex count of the m ladder")
    bn.add_argument("--sizes", metavar="M,M,...",
                    help="edge counts of the m ladder (default: 500000,1000000,2000000,4000000)")
    bn.add_argument("--repeats", type=int, default=3, help="timed runs per size, best kept")
    bn.add_argument("--output", help="write the measurements as CSV")
    return parser


def _write_atomic(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        os.unlink(tmp)
        raise


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None


def _load(args) -> LabeledGraph:
    fmt = args.format
    if fmt == "auto":
        fmt = "pajek" if Path(args.input).suffix.lower() in PAJEK_SUFFIXES else "edgelist"
    text = _read(args.input)
    if fmt == "pajek":
        if args.vertices is not None:
            raise UsageError("--vertices only applies to edge lists")
        return parse_pajek(text)
    directed = args.mode in ("in", "out", "inout")
    return LabeledGraph(parse_edgelist(text, directed=directed, vertices=args.vertices))


def run_decompose(args) -> int:
    if args.kcore is not None and not args.subgraph_output:
        raise UsageError("--kcore needs --subgraph-output")
    if args.subgraph_output and args.kcore is None:
        raise UsageError("--subgraph-output needs --kcore")
    if args.kcore is not None and args.kcore < 0:
        raise UsageError("--kcore must be non-negative")

    lg = _load(args)
    g = lg.graph
    mode = g.default_mode if args.mode == "auto" else DegreeMode(args.mode)
    g.check_mode(mode)
    if g.ignored_loops:
        print(f"warning: ignored {g.ignored_loops} self-loop(s)", file=sys.stderr)

    t0 = time.perf_counter()
    assignment = core_decompose(g, mode)
    elapsed = time.perf_counter() - t0

    outputs = []
    if args.output:
        outputs.append((args.output, write_clu(assignment)))
    if args.kcore is not None:
        sub, old_ids = k_core_subgraph(g, assignment, args.kcore)
        if lg.labels is not None:
            labels = tuple(lg.labels[i] for i in old_ids)
        else:
            labels = tuple(str(i + 1) for i in old_ids)
        outputs.append((args.subgraph_output, write_pajek(LabeledGraph(sub, labels))))
    for path, text in outputs:
        _write_atomic(path, text)

    out = sys.stdout
    out.write(f"vertices {g.n}\n")
    out.write(f"lines {g.m}\n")
    out.write(f"directed {'yes' if g.directed else 'no'}\n")
    out.write(f"mode {mode.value}\n")
    out.write(f"density {g.density:.7f}\n")
    out.write(f"main core {assignment.main_core}\n")
    out.write(f"time {elapsed:.6f} s\n")
    if args.summary:
        out.write("\n")
        out.write(summarize(assignment).format_table())
    return EXIT_OK


def run_wordgraph(args) -> int:
    words = [w.strip() for w in _read(args.input).splitlines()]
    lg = word_graph([w for w in words if w])
    text = write_pajek(lg)
    if args.output:
        _write_atomic(args.output, text)
        print(f"vertices {lg.graph.n}\nlines {lg.graph.m}")
    else:
        sys.stdout.write(text)
        print(f"vertices {lg.graph.n}\nlines {lg.graph.m}", file=sys.stderr)
    return EXIT_OK


def run_bench(args) -> int:
    m_ladder = bench.DEFAULT_M_LADDER
    if args.sizes:
        try:
            m_ladder = tuple(int(s) for s in args.sizes.split(",") if s.strip())
        except ValueError:
            raise UsageError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    if args.vertices < 0 or any(m < 0 for m in m_ladder):
        raise UsageError("sizes must be non-negative")
    try:
        rows = bench.run_bench(n=args.vertices, m_ladder=m_ladder, seed=args.seed, repeats=args.repeats)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.output:
        _write_atomic(args.output, bench.format_csv(rows))
    sys.stdout.write(bench.format_table(rows))
    return EXIT_OK


COMMANDS = {"decompose": run_decompose, "wordgraph": run_wordgraph, "bench": run_bench}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ModeError) as exc:
        print(f"kcores: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphInputError, OSError) as exc:
        print(f"kcores: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
