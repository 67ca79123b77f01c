"""
Seeded instance generators: bounded-intersection families and incidence
graphs of projective planes over the integers mod a prime.
"""

import math
from itertools import product
from typing import List, Optional, Tuple

import numpy as np

from src.config import get_settings
from src.graph_tools import meets_degree_threshold
from src.logging_config import get_logger
from src.models import (
    BipartiteGraph,
    DomainError,
    GenerationError,
    PlaneOrder,
    SetFamily,
)
from src.solver import make_rng

logger = get_logger(__name__)


def _check_family_feasible(n: int, l: int, m: int, universe: int) -> None:
    if min(n, l, m, universe) < 0:
        raise GenerationError("n, l, m and universe must be non-negative")
    if n == 0:
        return
    if universe < l:
        raise GenerationError(
            f"universe {universe} is smaller than the set size l={l}",
            details={"constraint": "universe >= l"},
        )
    if m == 0 and n * l > universe:
        raise GenerationError(
            f"{n} disjoint sets of size {l} need universe >= {n * l}, got {universe}",
            details={"constraint": "n * l <= universe"},
        )
    if m == 1 and n * l * (l - 1) > universe * (universe - 1):
        raise GenerationError(
            f"{n} sets of size {l} sharing at most one element need "
            f"n*l(l-1)/2 <= universe(universe-1)/2 element pairs",
            details={"constraint": "pair counting"},
        )


def gen_family(
    n: int,
    l: int,
    m: int,
    universe: int,
    seed: int = 0,
    max_retries: Optional[int] = None,
) -> SetFamily:
    """
    Random family of n sets of size exactly l over {0..universe-1} with all
    pairwise intersections at most m.

    Sets are drawn in order; a candidate meeting an earlier set in more than
    m elements is redrawn, up to `max_retries` times per set.

    Raises:
        GenerationError: If the parameters are infeasible or retries run out
    """
    _check_family_feasible(n, l, m, universe)
    if max_retries is None:
        max_retries = get_settings().gen_max_retries

    rng = make_rng(seed)
    accepted: List[frozenset] = []
    for index in range(n):
        for _ in range(max_retries):
            candidate = frozenset(int(x) for x in rng.choice(universe, size=l, replace=False))
            if all(len(candidate & earlier) <= m for earlier in accepted):
                accepted.append(candidate)
                break
        else:
            logger.warning(
                f"Generation gave up on set {index} after {max_retries} retries",
                extra={"seed": seed, "n": n},
            )
            raise GenerationError(
                f"set {index} still meets an earlier set in more than m={m} "
                f"elements after {max_retries} retries",
                details={"constraint": "retry limit", "index": index},
            )

    logger.debug(f"Generated family n={n} l={l} m={m} universe={universe}", extra={"seed": seed})
    return SetFamily.of(accepted)


def plane_points(order: PlaneOrder) -> List[Tuple[int, int, int]]:
    """
    Normalised homogeneous triples over Z_q (first nonzero coordinate 1),
    in lexicographic order. They index both points and lines.
    """
    return [
        triple
        for triple in product(range(order.q), repeat=3)
        if any(triple) and next(c for c in triple if c) == 1
    ]


def gen_plane_incidence(order: PlaneOrder) -> BipartiteGraph:
    """
    Point-line incidence graph of PG(2, q): A = points, B = lines, and a
    point lies on a line when their dot product vanishes mod q.
    """
    triples = np.array(plane_points(order), dtype=np.int64)
    incident = (triples @ triples.T) % order.q == 0
    edges = frozenset((int(a), int(b)) for a, b in np.argwhere(incident))
    return BipartiteGraph(order.size, order.size, edges)


def gen_theorem3_instance(order: PlaneOrder, n: int) -> BipartiteGraph:
    """
    The first n points of PG(2, q) against all lines. Every point keeps
    degree q + 1, so the degree condition holds whenever (q + 1)^2 >= 2en.

    Raises:
        DomainError: If n exceeds the feasible range; the message names the
            largest feasible n
    """
    degree = order.q + 1
    largest = min(order.size, math.floor(degree * degree / (2 * math.e)))
    if n < 0 or n > order.size or not meets_degree_threshold(degree, n):
        raise DomainError(
            f"n={n} is infeasible for q={order.q}; largest feasible n is {largest}",
            details={"q": order.q, "largest_n": largest},
        )

    plane = gen_plane_incidence(order)
    edges = frozenset((a, b) for a, b in plane.edges if a < n)
    return BipartiteGraph(n, plane.size_b, edges)
