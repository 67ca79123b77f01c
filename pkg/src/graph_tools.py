"""
Bipartite graph checks for saturating matchings: 4-cycle detection, the
sqrt(2en) degree threshold, and the combined sufficient condition.
"""

import math
from itertools import combinations

from src.lll import leq_with_tolerance
from src.models import (
    BipartiteGraph,
    C4Check,
    C4Witness,
    ConditionReport,
    DomainError,
    Theorem3Report,
)


def is_c4_free(graph: BipartiteGraph) -> C4Check:
    """
    A bipartite graph has a 4-cycle iff two A-vertices share two neighbours.

    Pairs of A-vertices are scanned lexicographically; the witness uses the
    two smallest common neighbours of the first offending pair.
    """
    neighbourhoods = [frozenset(row) for row in graph.adjacency_a]
    for u, v in combinations(range(graph.size_a), 2):
        common = neighbourhoods[u] & neighbourhoods[v]
        if len(common) >= 2:
            u_prime, v_prime = sorted(common)[:2]
            return C4Check(free=False, witness=C4Witness(u, v, u_prime, v_prime))
    return C4Check(free=True)


def degree_threshold(n: int) -> float:
    """sqrt(2 e n), the minimum degree the matching condition asks for."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return math.sqrt(2 * math.e * n)


def meets_degree_threshold(degree: int, n: int) -> bool:
    """degree >= sqrt(2en), compared as degree^2 >= 2en."""
    return leq_with_tolerance(2 * math.e * n, float(degree) * degree)


def min_degree(n: int) -> int:
    """Smallest integer degree meeting the threshold for n A-vertices."""
    degree = math.isqrt(math.floor(2 * math.e * n))
    while not meets_degree_threshold(degree, n):
        degree += 1
    while degree > 0 and meets_degree_threshold(degree - 1, n):
        degree -= 1
    return degree


def check_theorem3(graph: BipartiteGraph) -> Theorem3Report:
    """
    Sufficient condition for a matching saturating A: no 4-cycle and every
    A-vertex has degree at least sqrt(2e|A|).

    Isolated A-vertices are reported as deficient. A failing report does not
    rule out a saturating matching.
    """
    n = graph.size_a
    degrees = [graph.degree(v) for v in range(n)]
    deficient = tuple(v for v, deg in enumerate(degrees) if not meets_degree_threshold(deg, n))
    smallest = min(degrees, default=0)

    lhs = 2 * math.e * n
    rhs = float(smallest) * smallest
    degree_report = ConditionReport(
        holds=not deficient,
        lhs=lhs,
        rhs=rhs,
        inputs={"n": n, "min_degree": smallest, "threshold": degree_threshold(n)},
    )
    return Theorem3Report(c4=is_c4_free(graph), degree=degree_report, deficient_vertices=deficient)
