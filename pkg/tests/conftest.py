"""
Pytest configuration and shared fixtures for the transversal test suite.

Provides canonical instances (Fano plane, K_{2,2}, the 6-cycle), seeded
random-instance factories, and a settings reset between tests.
"""

import random
from typing import Callable

import pytest

from src.config import ENV_VARS, get_settings
from src.generators import gen_plane_incidence
from src.models import BipartiteGraph, PlaneOrder, SetFamily


# Lines of PG(2, 2): any two meet in exactly one point
FANO_LINES = [
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
]


@pytest.fixture
def fano_family() -> SetFamily:
    """The 7 lines of the Fano plane as a family (n=7, l=3, m=1)."""
    return SetFamily.of(FANO_LINES)


@pytest.fixture
def fano_graph() -> BipartiteGraph:
    """Point-line incidence graph of the Fano plane."""
    return gen_plane_incidence(PlaneOrder(2))


@pytest.fixture
def k22() -> BipartiteGraph:
    """Complete bipartite graph K_{2,2}, the canonical 4-cycle."""
    return BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])


@pytest.fixture
def hexagon() -> BipartiteGraph:
    """6-cycle a0 b0 a1 b1 a2 b2: girth 6, so no 4-cycle."""
    return BipartiteGraph.from_edges(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])


@pytest.fixture
def make_random_family() -> Callable[..., SetFamily]:
    """Factory for random families: n in [min_n, max_n], labels below universe."""

    def _make(rng: random.Random, max_n: int, universe: int, min_n: int = 0, allow_empty: bool = True) -> SetFamily:
        n = rng.randint(min_n, max_n)
        low = 0 if allow_empty else 1
        sets = []
        for _ in range(n):
            size = rng.randint(low, universe)
            sets.append(rng.sample(range(universe), size))
        return SetFamily.of(sets)

    return _make


@pytest.fixture
def make_random_graph() -> Callable[..., BipartiteGraph]:
    """Factory for random bipartite graphs with at most max_vertices vertices."""

    def _make(rng: random.Random, max_vertices: int, density: float = 0.5) -> BipartiteGraph:
        size_a = rng.randint(0, max_vertices // 2)
        size_b = rng.randint(0, max_vertices - size_a)
        edges = [(a, b) for a in range(size_a) for b in range(size_b) if rng.random() < density]
        return BipartiteGraph.from_edges(size_a, size_b, edges)

    return _make


@pytest.fixture(autouse=True)
def reset_settings(monkeypatch):
    """Drop cached settings so environment changes in one test stay local."""
    for var in ENV_VARS:
        monkeypatch.delenv(var, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
