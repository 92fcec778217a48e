"""Core decomposition of networks in O(n + m) time."""

from .decompose import (
    CoreAssignment,
    CoreSummary,
    PeelState,
    core_decompose,
    k_core_subgraph,
    k_core_vertices,
    summarize,
)
from .graph import DegreeMode, Graph, GraphInputError, LoopPolicy, ModeError, build_graph, degree, neighbors
from .io import LabeledGraph, ParseError, parse_edgelist, parse_pajek, word_graph, write_clu, write_pajek

__version__ = "0.1.0"
