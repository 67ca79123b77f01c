"""
Operations on set families: parameters, transversal validation, and the
translation between bipartite graphs and families of neighbourhoods.
"""

from itertools import combinations

from src.models import (
    Assignment,
    BipartiteGraph,
    FamilyStats,
    InputError,
    Matching,
    MatchingCheck,
    PreconditionError,
    SetFamily,
    Transversal,
    TransversalCheck,
)


def family_stats(family: SetFamily) -> FamilyStats:
    """
    Compute the tightest l (minimum set size) and m (maximum intersection
    over distinct index pairs) of a family.

    Args:
        family: The family to measure

    Returns:
        FamilyStats; l is None for the empty family and m is 0 when n < 2
    """
    sizes = [len(members) for members in family.sets]
    first_empty = next((i for i, size in enumerate(sizes) if size == 0), None)

    m = 0
    for left, right in combinations(family.member_sets, 2):
        m = max(m, len(left & right))

    return FamilyStats(
        n=family.n,
        l=min(sizes) if sizes else None,
        m=m,
        has_empty_set=first_empty is not None,
        first_empty_index=first_empty,
    )


def validate_transversal(family: SetFamily, assignment: Assignment) -> TransversalCheck:
    """
    Check that every choice lies in its set and that all choices are distinct.

    The first violation is reported: membership failures are scanned in
    index order first, then the lexicographically smallest colliding pair.

    Raises:
        InputError: If the assignment length differs from the family size
    """
    if len(assignment) != family.n:
        raise InputError(
            f"assignment has {len(assignment)} choices for {family.n} sets",
            details={"expected": family.n, "actual": len(assignment)},
        )

    for index, choice in enumerate(assignment.choices):
        if choice not in family.member_sets[index]:
            return TransversalCheck(valid=False, missing_index=index)

    first_seen = {}
    collision = None
    for index, choice in enumerate(assignment.choices):
        if choice in first_seen:
            pair = (first_seen[choice], index)
            if collision is None or pair < collision:
                collision = pair
        else:
            first_seen[choice] = index
    if collision is not None:
        return TransversalCheck(valid=False, collision=collision)

    return TransversalCheck(valid=True)


def make_transversal(family: SetFamily, assignment: Assignment) -> Transversal:
    """
    Promote an assignment to a Transversal after validating it.

    Raises:
        PreconditionError: If the assignment is not a transversal of the family
    """
    check = validate_transversal(family, assignment)
    if not check.valid:
        raise PreconditionError(
            f"not a transversal: {check.reason}",
            details={"missing_index": check.missing_index, "collision": check.collision},
        )
    return Transversal(assignment.choices)


def neighbor_family(graph: BipartiteGraph) -> SetFamily:
    """Family of B-neighbourhoods, one set per A-vertex in vertex order."""
    return SetFamily(graph.adjacency_a)


def matching_from_transversal(graph: BipartiteGraph, transversal: Assignment) -> Matching:
    """
    Pair each A-vertex with the neighbour representing its neighbourhood.

    The resulting matching saturates A.

    Raises:
        PreconditionError: If the choices are not a transversal of the
            graph's neighbour family
    """
    family = neighbor_family(graph)
    if len(transversal) != family.n:
        raise PreconditionError(
            f"transversal has {len(transversal)} choices for {family.n} A-vertices"
        )
    make_transversal(family, transversal)
    return Matching(frozenset(enumerate(transversal.choices)))


def validate_matching(
    graph: BipartiteGraph, matching: Matching, require_saturate_a: bool = False
) -> MatchingCheck:
    """
    Check that a matching uses only edges of the graph and no vertex twice,
    and optionally that it covers every A-vertex.
    """
    used_a = set()
    used_b = set()
    for a, b in matching.sorted_pairs:
        if (a, b) not in graph.edges:
            return MatchingCheck(False, f"({a}, {b}) is not an edge", (a, b))
        if a in used_a:
            return MatchingCheck(False, f"A-vertex {a} is matched twice", (a, b))
        if b in used_b:
            return MatchingCheck(False, f"B-vertex {b} is matched twice", (a, b))
        used_a.add(a)
        used_b.add(b)

    saturates = len(used_a) == graph.size_a
    if require_saturate_a and not saturates:
        return MatchingCheck(
            False,
            f"matching covers {len(used_a)} of {graph.size_a} A-vertices",
            saturates_a=False,
        )
    return MatchingCheck(True, saturates_a=saturates)
