"""
Resampling solver for transversals.

Draw X_i uniformly from every S_i; while some pair collides, redraw both
variables of the lexicographically smallest colliding pair. Each redraw of a
pair counts as one resample. The run stops at `rounds_cap` resamples.

Randomness comes from numpy's PCG64 generator seeded with a 64-bit integer;
`Generator.integers` draws bounded integers without modulo bias.
"""

from collections import defaultdict
from typing import List, Optional, Sequence

import numpy as np

from src.config import get_settings
from src.families import make_transversal
from src.logging_config import get_logger
from src.models import (
    Assignment,
    DomainError,
    InputError,
    Pair,
    SetFamily,
    SolveOutcome,
)

logger = get_logger(__name__)

MAX_SEED = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    """
    Deterministic generator for a 64-bit seed.

    Raises:
        InputError: If the seed is not an integer in [0, 2^64)
    """
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or not 0 <= seed <= MAX_SEED:
        raise InputError(f"seed must be an integer in [0, 2^64), got {seed!r}")
    return np.random.Generator(np.random.PCG64(int(seed)))


def derive_seed(master_seed: int, trial: int) -> int:
    """Per-trial seed, a pure function of (master seed, trial index)."""
    sequence = np.random.SeedSequence([int(master_seed), int(trial)])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def default_rounds_cap(n: int) -> int:
    """Default resample cap: base + per_n2 * n^2 (10 000 + 100 n^2 unconfigured)."""
    settings = get_settings()
    return settings.rounds_cap_base + settings.rounds_cap_per_n2 * n * n


def _require_nonempty(family: SetFamily) -> None:
    for index, members in enumerate(family.sets):
        if not members:
            raise DomainError(
                f"set {index} is empty; no uniform pick exists",
                details={"index": index},
            )


def _draw(members: Sequence[int], rng: np.random.Generator) -> int:
    return members[int(rng.integers(len(members)))]


def sample_tuple(family: SetFamily, rng: np.random.Generator) -> Assignment:
    """
    Draw one element uniformly and independently from every set.

    Raises:
        DomainError: If a set is empty
    """
    _require_nonempty(family)
    return Assignment(tuple(_draw(members, rng) for members in family.sets))


def violated_events(family: SetFamily, assignment: Assignment) -> List[Pair]:
    """All index pairs (i, j), i < j, with equal choices, in lexicographic order."""
    if len(assignment) != family.n:
        raise InputError(
            f"assignment has {len(assignment)} choices for {family.n} sets"
        )
    holders = defaultdict(list)
    for index, choice in enumerate(assignment.choices):
        holders[choice].append(index)

    pairs = []
    for group in holders.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                pairs.append((group[a], group[b]))
    return sorted(pairs)


def _first_violation(choices: Sequence[int]) -> Optional[Pair]:
    # Every index sits in exactly one holder group, so the smallest
    # violated pair is the first two members of the group with the
    # smallest first member.
    holders = defaultdict(list)
    for index, choice in enumerate(choices):
        holders[choice].append(index)
    candidates = [(group[0], group[1]) for group in holders.values() if len(group) > 1]
    return min(candidates) if candidates else None


def find_transversal_mt(
    family: SetFamily, seed: int = 0, rounds_cap: Optional[int] = None
) -> SolveOutcome:
    """
    Search for a transversal by resampling colliding pairs.

    Args:
        family: Family with nonempty sets
        seed: 64-bit seed; identical inputs give identical outcomes
        rounds_cap: Maximum number of resamples (default_rounds_cap(n) if None)

    Returns:
        SolveOutcome carrying the transversal, or exhausted after rounds_cap
        resamples

    Raises:
        DomainError: If a set is empty
        InputError: If rounds_cap is negative or the seed is invalid
    """
    if rounds_cap is None:
        rounds_cap = default_rounds_cap(family.n)
    if rounds_cap < 0:
        raise InputError(f"rounds_cap must be non-negative, got {rounds_cap}")

    rng = make_rng(seed)
    _require_nonempty(family)
    choices = [_draw(members, rng) for members in family.sets]
    resamples = 0

    while True:
        violation = _first_violation(choices)
        if violation is None:
            transversal = make_transversal(family, Assignment(tuple(choices)))
            logger.debug(
                f"Transversal found for n={family.n} after {resamples} resamples",
                extra={"seed": seed, "n": family.n, "resample_count": resamples},
            )
            return SolveOutcome(transversal, resamples, rounds_cap, seed)
        if resamples >= rounds_cap:
            logger.warning(
                f"Resampling exhausted for n={family.n} after {resamples} resamples",
                extra={"seed": seed, "n": family.n, "rounds_cap": rounds_cap},
            )
            return SolveOutcome(None, resamples, rounds_cap, seed)

        i, j = violation
        choices[i] = _draw(family.sets[i], rng)
        choices[j] = _draw(family.sets[j], rng)
        resamples += 1
