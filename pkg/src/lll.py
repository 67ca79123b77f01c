"""
Local lemma engine.

Collision events E_ij = {X_i = X_j} for a random tuple with X_i uniform
over S_i, their structural dependency digraph, and the checkers for the
general lemma, its symmetric corollary and the transversal condition
e * m * (2n - 3) <= l^2.

All real comparisons go through `leq_with_tolerance`, which resolves ties
within a relative 1e-12 in favour of "holds".
"""

import math
from fractions import Fraction
from itertools import combinations
from typing import Optional

from src.models import (
    DependencyDigraph,
    DomainError,
    FamilyStats,
    InputError,
    LllCertificate,
    LllCheck,
    Real,
    SetFamily,
    ConditionReport,
)

TIE_TOLERANCE = 1e-12


def leq_with_tolerance(lhs: float, rhs: float) -> bool:
    """lhs <= rhs, counting relative ties within TIE_TOLERANCE as true."""
    return lhs <= rhs or math.isclose(lhs, rhs, rel_tol=TIE_TOLERANCE)


def pair_event_probability(family: SetFamily, i: int, j: int) -> Fraction:
    """
    Exact probability that independent uniform picks from S_i and S_j coincide.

    Returns:
        |S_i & S_j| / (|S_i| * |S_j|) as a Fraction

    Raises:
        InputError: If i == j or an index is out of range
        DomainError: If either set is empty
    """
    if i == j:
        raise InputError("collision events need two distinct indices", details={"index": i})
    for index in (i, j):
        if not 0 <= index < family.n:
            raise InputError(f"index {index} out of range for {family.n} sets")
        if not family.sets[index]:
            raise DomainError(
                f"set {index} is empty; no uniform pick exists",
                details={"index": index},
            )
    common = len(family.member_sets[i] & family.member_sets[j])
    return Fraction(common, len(family.sets[i]) * len(family.sets[j]))


def build_dependency_digraph(n: int) -> DependencyDigraph:
    """
    Dependency digraph of the n(n-1)/2 collision events over n indices.

    Two events are adjacent when they share an index, which gives every
    event exactly 2n - 4 neighbours.

    Raises:
        DomainError: If n < 2
    """
    if n < 2:
        raise DomainError(f"collision events need at least 2 indices, got n={n}")

    events = tuple(combinations(range(n), 2))
    incident = [[] for _ in range(n)]
    for k, (i, j) in enumerate(events):
        incident[i].append(k)
        incident[j].append(k)

    neighbours = []
    for k, (i, j) in enumerate(events):
        shared = set(incident[i]) | set(incident[j])
        shared.discard(k)
        neighbours.append(tuple(sorted(shared)))

    return DependencyDigraph(n=n, events=events, neighbours=tuple(neighbours))


def check_symmetric_corollary(p: Real, d: int) -> ConditionReport:
    """
    Symmetric local lemma: every event has probability at most p and
    depends on at most d others; holds iff e * p * (d + 1) <= 1.

    Raises:
        DomainError: If p is outside [0, 1] or d is negative
    """
    if not 0 <= p <= 1:
        raise DomainError(f"probability bound must lie in [0, 1], got {p}")
    if d < 0:
        raise DomainError(f"dependency degree must be non-negative, got {d}")

    lhs = math.e * float(p) * (d + 1)
    return ConditionReport(
        holds=leq_with_tolerance(lhs, 1.0),
        lhs=lhs,
        rhs=1.0,
        inputs={"p": float(p), "d": d},
    )


def check_general_lll(cert: LllCertificate) -> LllCheck:
    """
    General local lemma: accept iff P(E_k) <= x_k * prod_{j ~ k} (1 - x_j)
    for every event k.

    Returns:
        LllCheck with the minimum slack, the event attaining it, and the
        lower bound prod(1 - x_k) on avoiding every event
    """
    weights = cert.weights
    holds = True
    min_slack = math.inf
    worst: Optional[int] = None

    for k, neighbours in enumerate(cert.digraph.neighbours):
        bound = weights[k] * math.prod(1.0 - weights[j] for j in neighbours)
        p = float(cert.probabilities[k])
        if not leq_with_tolerance(p, bound):
            holds = False
        slack = bound - p
        if slack < min_slack:
            min_slack, worst = slack, k

    return LllCheck(
        holds=holds,
        min_slack=min_slack if worst is not None else 0.0,
        worst_event=worst,
        avoid_all_lower_bound=math.prod(1.0 - x for x in weights),
    )


def theorem2_condition(n: int, l: Real, m: Real) -> ConditionReport:
    """
    Transversal condition on raw parameters: every set has at least l
    elements and distinct sets share at most m.

    n >= 2: holds iff e * m * (2n - 3) <= l^2 (squared form, no root taken).
    n == 1: holds iff l > 0 (one nonempty set always has a representative).
    n == 0: holds vacuously.

    Raises:
        DomainError: If a parameter is negative
    """
    if n < 0 or l < 0 or m < 0:
        raise DomainError(
            "n, l and m must be non-negative",
            details={"n": n, "l": float(l), "m": float(m)},
        )

    rhs = float(l) * float(l)
    inputs = {"n": n, "l": l, "m": m}
    if n == 0:
        return ConditionReport(holds=True, lhs=0.0, rhs=rhs, inputs=inputs)
    if n == 1:
        return ConditionReport(holds=l > 0, lhs=0.0, rhs=rhs, inputs=inputs)

    lhs = math.e * float(m) * (2 * n - 3)
    holds = l > 0 and leq_with_tolerance(lhs, rhs)
    return ConditionReport(holds=holds, lhs=lhs, rhs=rhs, inputs=inputs)


def check_theorem2(stats: FamilyStats) -> ConditionReport:
    """
    Transversal condition evaluated at a family's tightest l and m.

    Raises:
        DomainError: If the family contains an empty set
    """
    if stats.has_empty_set:
        raise DomainError(
            f"set {stats.first_empty_index} is empty",
            details={"index": stats.first_empty_index},
        )
    return theorem2_condition(stats.n, stats.l or 0, stats.m)


def symmetric_certificate(n: int, p: Real) -> LllCertificate:
    """
    Uniform certificate used by the transversal condition's proof:
    every event gets probability p and weight 1/(d + 1), d = 2n - 4.

    With n = 2 there is a single event (d = 0); the weight is 1/e there
    because the lemma requires weights below 1.
    """
    digraph = build_dependency_digraph(n)
    d = digraph.max_degree
    weight = 1.0 / (d + 1) if d > 0 else 1.0 / math.e
    count = len(digraph.events)
    return LllCertificate(
        probabilities=(p,) * count,
        weights=(weight,) * count,
        digraph=digraph,
    )


def family_certificate(family: SetFamily) -> LllCertificate:
    """
    Certificate built from each event's exact probability.

    Event k gets weight e * P(E_k); events with e * P(E_k) >= 1 get weight 0
    and therefore fail the check. Whenever the transversal condition holds
    this certificate passes, and it can pass where the uniform bound fails.

    Raises:
        DomainError: If n < 2 or a set is empty
    """
    digraph = build_dependency_digraph(family.n)
    probabilities = tuple(pair_event_probability(family, i, j) for i, j in digraph.events)
    weights = []
    for p in probabilities:
        x = math.e * float(p)
        weights.append(x if x < 1 else 0.0)
    return LllCertificate(probabilities=probabilities, weights=tuple(weights), digraph=digraph)


def max_family_size(l: int, m: int) -> Optional[int]:
    """
    Largest n for which the transversal condition holds at fixed l and m.

    Returns:
        None when m == 0 and l > 0 (every n qualifies), otherwise the bound
    """
    if l <= 0:
        return 0
    if m == 0:
        return None
    estimate = max(1, math.floor((l * l / (math.e * m) + 3) / 2))
    while estimate > 1 and not theorem2_condition(estimate, l, m).holds:
        estimate -= 1
    while theorem2_condition(estimate + 1, l, m).holds:
        estimate += 1
    return estimate
