"""
Transversal toolkit - sufficient conditions for transversals of set
families, a resampling construction, exact matching oracles, and their
application to saturating matchings in 4-cycle-free bipartite graphs.
"""

__version__ = "1.0.0"

from src.models import (
    Assignment,
    BipartiteGraph,
    ConditionReport,
    FamilyStats,
    Matching,
    SetFamily,
    SolveOutcome,
    Transversal,
    TransversalError,
)
from src.families import family_stats, validate_transversal, neighbor_family
from src.lll import check_theorem2, theorem2_condition
from src.solver import find_transversal_mt
from src.oracle import has_transversal_exact, max_matching
from src.graph_tools import check_theorem3, is_c4_free

__all__ = [
    "Assignment",
    "BipartiteGraph",
    "ConditionReport",
    "FamilyStats",
    "Matching",
    "SetFamily",
    "SolveOutcome",
    "Transversal",
    "TransversalError",
    "family_stats",
    "validate_transversal",
    "neighbor_family",
    "check_theorem2",
    "theorem2_condition",
    "find_transversal_mt",
    "has_transversal_exact",
    "max_matching",
    "check_theorem3",
    "is_c4_free",
]
