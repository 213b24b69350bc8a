"""Nested-neighbourhood algorithms for P5-free chordal bipartite graphs."""
from .graph import (Bipartition, Graph, complement, connected_components, find_bipartition,
                    parse_graph, to_edge_list)
from .nno import NNODecomposition, decompose_member, maximal_bicliques, nno_decompose, verify_nno
from .recognition import RecognitionReport, recognize

__all__ = [
    "Bipartition", "Graph", "NNODecomposition", "RecognitionReport", "complement",
    "connected_components", "decompose_member", "find_bipartition", "maximal_bicliques",
    "nno_decompose", "parse_graph", "recognize", "to_edge_list", "verify_nno",
]
__version__ = "0.1.0"
