"""
Unit tests for the instance generators.
"""

import pytest

from src.families import family_stats
from src.generators import gen_family, gen_plane_incidence, gen_theorem3_instance, plane_points
from src.graph_tools import is_c4_free
from src.models import DomainError, GenerationError, PlaneOrder


@pytest.mark.unit
class TestGenFamily:
    """Test gen_family."""

    def test_parameters_respected(self):
        """Test n, exact size l and intersection bound m."""
        family = gen_family(20, 11, 1, universe=400, seed=5)
        stats = family_stats(family)

        assert stats.n == 20
        assert all(len(s) == 11 for s in family.sets)
        assert stats.m <= 1
        assert max(family.universe) < 400

    def test_disjoint_fill(self):
        """Test m=0 packs disjoint sets into a tight universe."""
        family = gen_family(3, 2, 0, universe=6, seed=1, max_retries=10_000)

        assert family_stats(family).m == 0
        assert sorted(family.universe) == list(range(6))

    def test_infeasible_disjoint(self):
        """Test n=2, l=3, m=0 cannot fit in 5 elements."""
        with pytest.raises(GenerationError) as exc_info:
            gen_family(2, 3, 0, universe=5)

        assert "n * l <= universe" in exc_info.value.details["constraint"]

    def test_universe_smaller_than_l(self):
        """Test l above the universe size."""
        with pytest.raises(GenerationError):
            gen_family(1, 4, 2, universe=3)

    def test_retries_run_out(self):
        """Test a zero retry budget fails on the first set."""
        with pytest.raises(GenerationError) as exc_info:
            gen_family(2, 2, 1, universe=10, max_retries=0)

        assert exc_info.value.details["index"] == 0

    def test_empty_request(self):
        """Test n=0 gives the empty family."""
        assert gen_family(0, 3, 1, universe=10).n == 0

    def test_deterministic(self):
        """Test a seed reproduces the family."""
        assert gen_family(10, 5, 1, 100, seed=42) == gen_family(10, 5, 1, 100, seed=42)
        assert gen_family(10, 5, 1, 100, seed=42) != gen_family(10, 5, 1, 100, seed=43)

    def test_seeded_sweep_validates(self):
        """Test 200 seeded families all satisfy their own parameters."""
        for seed in range(200):
            n, l, m = 2 + seed % 9, 3 + seed % 5, seed % 3
            family = gen_family(n, l, m, universe=300, seed=seed)
            stats = family_stats(family)

            assert stats.n == n
            assert stats.l == l
            assert stats.m <= m


@pytest.mark.unit
class TestPlaneIncidence:
    """Test plane_points and gen_plane_incidence."""

    def test_fano_points(self):
        """Test the 7 normalised triples over Z_2 in order."""
        assert plane_points(PlaneOrder(2)) == [
            (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1),
        ]

    @pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
    def test_plane_structure(self, q):
        """Test regularity q + 1, the edge count and the absence of 4-cycles."""
        order = PlaneOrder(q)
        graph = gen_plane_incidence(order)
        lines_per_point = [len(row) for row in graph.adjacency_a]
        points_per_line = [0] * graph.size_b
        for _, b in graph.edges:
            points_per_line[b] += 1

        assert graph.size_a == graph.size_b == q * q + q + 1
        assert len(graph.edges) == (q * q + q + 1) * (q + 1)
        assert set(lines_per_point) == {q + 1}
        assert set(points_per_line) == {q + 1}
        assert is_c4_free(graph).free

    def test_non_prime_rejected(self):
        """Test q=4 is refused before any graph is built."""
        with pytest.raises(DomainError):
            gen_plane_incidence(PlaneOrder(4))


@pytest.mark.unit
class TestTheorem3Instance:
    """Test gen_theorem3_instance."""

    def test_thirty_six_points(self):
        """Test q=13 with n=36."""
        graph = gen_theorem3_instance(PlaneOrder(13), 36)

        assert graph.size_a == 36
        assert graph.size_b == 183
        assert all(len(row) == 14 for row in graph.adjacency_a)

    def test_thirty_seven_rejected(self):
        """Test n=37 is infeasible and the error names 36."""
        with pytest.raises(DomainError) as exc_info:
            gen_theorem3_instance(PlaneOrder(13), 37)

        assert "36" in exc_info.value.message
        assert exc_info.value.details["largest_n"] == 36

    def test_fano_single_point(self):
        """Test q=2 admits n=1 only."""
        assert gen_theorem3_instance(PlaneOrder(2), 1).size_a == 1
        with pytest.raises(DomainError):
            gen_theorem3_instance(PlaneOrder(2), 2)
