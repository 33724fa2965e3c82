"""Edge colorings for the 3-proper index px3.

Constructions, exact verification by proper Steiner-tree search and a
brute-force px3 oracle for small graphs. The search kernels come from a
compiled extension when one was built and from pure Python otherwise; set
``PROPERINDEX_KERNEL=python`` to force the fallback.
"""

from ._kernels import available_backends, default_backend
from .basic import color_by_contraction, color_traceable, color_tree, spanning_tree_coloring
from .coloring import (ColoringError, EdgeColoring, ProperTreeWitness, VerifyReport,
                       check_witness, proper_path_exists, proper_s_tree, verify_3_proper)
from .domination import (DominatingSetCert, gamma_c_exact, greedy_connected_dominating_set,
                         min_connected_dominating_set, verify_dominating)
from .ears import EarDecomposition, color_ear, nonincreasing_ear_decomposition
from .formats import ParseError, parse_graph, render_graph
from .generators import ChainSpec, ThresholdSpec, generate
from .graph import CapExceeded, Graph, GraphError
from .oracle import PxResult, px3_exact, px3_lower_bound_refute
from .three_dom import color_three_dom, recognize_chain, recognize_threshold
from .three_way import ThreeWayColoringTrace, color_three_way

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "ChainSpec", "ColoringError", "DominatingSetCert", "EarDecomposition",
    "EdgeColoring", "Graph", "GraphError", "ParseError", "ProperTreeWitness", "PxResult",
    "ThreeWayColoringTrace", "ThresholdSpec", "VerifyReport", "available_backends",
    "check_witness", "color_by_contraction", "color_ear", "color_three_dom", "color_three_way",
    "color_traceable", "color_tree", "default_backend", "gamma_c_exact", "generate",
    "greedy_connected_dominating_set", "min_connected_dominating_set",
    "nonincreasing_ear_decomposition", "parse_graph", "proper_path_exists", "proper_s_tree",
    "px3_exact", "px3_lower_bound_refute", "recognize_chain", "recognize_threshold",
    "render_graph", "spanning_tree_coloring", "verify_3_proper", "verify_dominating",
]
