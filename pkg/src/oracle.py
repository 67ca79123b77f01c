"""
Exact decision procedures: maximum bipartite matching (Hopcroft-Karp),
transversal existence, and Hall-condition violation witnesses.
"""

from collections import deque
from itertools import combinations
from typing import List, Optional, Tuple

from src.config import get_settings
from src.families import make_transversal
from src.logging_config import get_logger
from src.models import (
    Assignment,
    BipartiteGraph,
    CapacityError,
    ExactResult,
    Matching,
    SetFamily,
)

logger = get_logger(__name__)

NIL = -1


class HopcroftKarp:
    """
    Maximum-cardinality matching in O(E sqrt(V)).

    Alternates a breadth-first layering from the free A-vertices with
    depth-first augmentation along the layers. The depth-first phase uses
    an explicit stack, so long augmenting paths do not hit the recursion
    limit.
    """

    def __init__(self, graph: BipartiteGraph):
        self.graph = graph
        self.adj = graph.adjacency_a
        self.match_a: List[int] = [NIL] * graph.size_a
        self.match_b: List[int] = [NIL] * graph.size_b
        self.dist: List[float] = [0.0] * graph.size_a
        self.dist_nil = 0.0

    def _layer(self) -> bool:
        """Layer A-vertices by alternating distance from free vertices."""
        queue = deque()
        for a in range(self.graph.size_a):
            if self.match_a[a] == NIL:
                self.dist[a] = 0
                queue.append(a)
            else:
                self.dist[a] = float("inf")
        self.dist_nil = float("inf")

        while queue:
            a = queue.popleft()
            if self.dist[a] < self.dist_nil:
                for b in self.adj[a]:
                    partner = self.match_b[b]
                    if partner == NIL:
                        if self.dist_nil == float("inf"):
                            self.dist_nil = self.dist[a] + 1
                    elif self.dist[partner] == float("inf"):
                        self.dist[partner] = self.dist[a] + 1
                        queue.append(partner)
        return self.dist_nil != float("inf")

    def _augment(self, root: int) -> bool:
        """Find one layered augmenting path from `root` and flip it."""
        stack = [(root, iter(self.adj[root]))]
        via: List[int] = []  # B-vertex leading from stack[t] to stack[t + 1]
        while stack:
            a, neighbours = stack[-1]
            advanced = False
            for b in neighbours:
                partner = self.match_b[b]
                if partner == NIL:
                    if self.dist_nil == self.dist[a] + 1:
                        via.append(b)
                        for (u, _), v in zip(stack, via):
                            self.match_a[u] = v
                            self.match_b[v] = u
                        return True
                elif self.dist[partner] == self.dist[a] + 1:
                    via.append(b)
                    stack.append((partner, iter(self.adj[partner])))
                    advanced = True
                    break
            if not advanced:
                # dead end: never revisit in this phase
                self.dist[a] = float("inf")
                stack.pop()
                if via:
                    via.pop()
        return False

    def __call__(self) -> Matching:
        self.match_a = [NIL] * self.graph.size_a
        self.match_b = [NIL] * self.graph.size_b
        while self._layer():
            for a in range(self.graph.size_a):
                if self.match_a[a] == NIL:
                    self._augment(a)
        return Matching(
            frozenset((a, b) for a, b in enumerate(self.match_a) if b != NIL)
        )


def max_matching(graph: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching of a bipartite graph."""
    matching = HopcroftKarp(graph)()
    logger.debug(f"Maximum matching of size {len(matching)} on |A|={graph.size_a}")
    return matching


def incidence_graph(family: SetFamily) -> Tuple[BipartiteGraph, Tuple[int, ...]]:
    """
    Membership graph of a family: A = indices, B = distinct union elements
    in ascending order.

    Returns:
        The graph and the element label of every B-vertex
    """
    elements = family.universe
    position = {element: b for b, element in enumerate(elements)}
    edges = frozenset(
        (index, position[element])
        for index, members in enumerate(family.sets)
        for element in members
    )
    return BipartiteGraph(family.n, len(elements), edges), elements


def has_transversal_exact(family: SetFamily) -> ExactResult:
    """
    Decide transversal existence via maximum matching on the membership graph.

    Returns:
        ExactResult, with a validated Transversal when one exists
    """
    graph, elements = incidence_graph(family)
    matching = max_matching(graph)
    if len(matching) < family.n:
        return ExactResult(exists=False)

    choices = [0] * family.n
    for index, b in matching.pairs:
        choices[index] = elements[b]
    return ExactResult(exists=True, transversal=make_transversal(family, Assignment(tuple(choices))))


def transversal_deficiency(family: SetFamily) -> int:
    """Number of sets that must be dropped before a transversal exists."""
    graph, _ = incidence_graph(family)
    return family.n - len(max_matching(graph))


def hall_violating_subfamily(
    family: SetFamily, max_n: Optional[int] = None
) -> Optional[Tuple[int, ...]]:
    """
    Find index subsets whose union is smaller than the subset.

    Subsets are scanned by size, then lexicographically; the first deficient
    one is returned.

    Args:
        family: Family to inspect
        max_n: Largest n accepted (configured Hall limit, 20, if None)

    Returns:
        Sorted indices of a deficient subfamily, or None if Hall's condition
        holds

    Raises:
        CapacityError: If n exceeds max_n
    """
    if max_n is None:
        max_n = get_settings().hall_max_n
    if family.n > max_n:
        raise CapacityError(
            f"subset enumeration limited to {max_n} sets, family has {family.n}; "
            "use has_transversal_exact instead",
            details={"n": family.n, "max_n": max_n},
        )

    position = {element: bit for bit, element in enumerate(family.universe)}
    masks = [sum(1 << position[x] for x in members) for members in family.sets]

    for size in range(1, family.n + 1):
        for subset in combinations(range(family.n), size):
            union = 0
            for index in subset:
                union |= masks[index]
            if union.bit_count() < size:
                return subset
    return None
