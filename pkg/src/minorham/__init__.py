"""Hamiltonicity and K_{2,t} minors of 3-connected planar graphs.

Exact kernels (canonical labelling, planarity, connectivity, minor and
Hamilton searches) run under numba when available; set
``MINORHAM_DISABLE_NUMBA=1`` for the pure-Python path.
"""

from ._accel import NUMBA_ENABLED
from .canon import canonical_code, canonical_form
from .enumerate import CountReport, count_k25_free, generate_3c_planar, generate_triangulations
from .families import FamilySpec, g_k, goldner_harary, herschel, named_graph, petersen, prism_with_chords
from .g6 import Graph6Error, from_graph6, parse_graph, read_graphs, to_graph6
from .graph import Graph, GraphError, build_graph
from .hamilton import Cycle, HamPath, hamilton_cycle, is_hamiltonian, longest_cycle
from .minors import StandardModel, enumerate_k2t_models, find_k2t_model, find_rooted_k22, has_k2t_minor
from .reductions import ReductionStep, ReductionTrace, lift_cycle, normalize_claim3

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "CountReport",
    "Cycle",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "GraphError",
    "HamPath",
    "ReductionStep",
    "ReductionTrace",
    "StandardModel",
    "build_graph",
    "canonical_code",
    "canonical_form",
    "count_k25_free",
    "enumerate_k2t_models",
    "find_k2t_model",
    "find_rooted_k22",
    "from_graph6",
    "g_k",
    "generate_3c_planar",
    "generate_triangulations",
    "goldner_harary",
    "hamilton_cycle",
    "has_k2t_minor",
    "herschel",
    "is_hamiltonian",
    "lift_cycle",
    "longest_cycle",
    "named_graph",
    "normalize_claim3",
    "parse_graph",
    "petersen",
    "prism_with_chords",
    "read_graphs",
    "to_graph6",
]
