"""Exact small-graph toolkit for even pairs, parity of clique pairs and
perfectness, with verification suites and exhaustive scans."""

from .berge import find_odd_antihole, find_odd_hole, find_prism, find_star_cutset, is_berge, is_bipartisan
from .generators import (
    DoubleSplitSpec,
    enumerate_graphs,
    gen_antihole,
    gen_double_split,
    gen_hole,
    gen_prism,
    gen_random_bipartite,
)
from .graph import Graph, GraphError, build_graph, complement, contract_pair, decode_graph6, encode_graph6
from .invariants import Coloring, chromatic_number, clique_number, independence_number, is_perfect
from .linegraph import clique_bipartition, line_graph, root_graph
from .merge import merge_cliques, recolor_after_merge
from .partitionable import bht_report, find_partitionable_witness
from .paths import Verdict, classify_clique_pair, external_paths, find_even_pair, is_even_pair

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "DoubleSplitSpec",
    "Graph",
    "GraphError",
    "Verdict",
    "bht_report",
    "build_graph",
    "chromatic_number",
    "classify_clique_pair",
    "clique_bipartition",
    "clique_number",
    "complement",
    "contract_pair",
    "decode_graph6",
    "encode_graph6",
    "enumerate_graphs",
    "external_paths",
    "find_even_pair",
    "find_odd_antihole",
    "find_odd_hole",
    "find_partitionable_witness",
    "find_prism",
    "find_star_cutset",
    "gen_antihole",
    "gen_double_split",
    "gen_hole",
    "gen_prism",
    "gen_random_bipartite",
    "independence_number",
    "is_berge",
    "is_bipartisan",
    "is_even_pair",
    "is_perfect",
    "line_graph",
    "merge_cliques",
    "recolor_after_merge",
    "root_graph",
]
