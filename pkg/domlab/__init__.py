# ----------------------------------------------------------
# Domination Lab
# File: domlab/__init__.py
# ----------------------------------------------------------
# Description:
# Graph construction and verification lab for cubic graphs whose
# domination number exceeds ceil(v/3). Re-exports the most used
# entry points.
# ----------------------------------------------------------

from domlab.analysis import analyze, bridges, hamiltonian_cycle, is_cubic, vertex_connectivity
from domlab.certification import certified_gamma, check_stability, compositional_lower_bound
from domlab.domination import DominationResult, gamma_bruteforce, gamma_exact, is_dominating
from domlab.families import build_family
from domlab.graph6 import parse_graph6, write_graph6
from domlab.graph_core import Graph

__version__ = "1.0.0"

__all__ = [
    "Graph",
    "parse_graph6",
    "write_graph6",
    "build_family",
    "is_cubic",
    "bridges",
    "vertex_connectivity",
    "hamiltonian_cycle",
    "analyze",
    "DominationResult",
    "is_dominating",
    "gamma_bruteforce",
    "gamma_exact",
    "check_stability",
    "compositional_lower_bound",
    "certified_gamma",
]
