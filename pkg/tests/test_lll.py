"""
Unit tests for the local lemma engine.
"""

import math
import random
from fractions import Fraction
from itertools import product

import pytest

from src.families import family_stats
from src.generators import gen_family
from src.lll import (
    build_dependency_digraph,
    check_general_lll,
    check_symmetric_corollary,
    check_theorem2,
    family_certificate,
    leq_with_tolerance,
    max_family_size,
    pair_event_probability,
    symmetric_certificate,
    theorem2_condition,
)
from src.models import DomainError, InputError, LllCertificate, SetFamily


@pytest.mark.unit
class TestPairEventProbability:
    """Test pair_event_probability."""

    def test_disjoint(self):
        """Test disjoint sets never collide."""
        family = SetFamily.of([[0, 1], [2, 3]])

        assert pair_event_probability(family, 0, 1) == 0

    def test_equal_pairs(self):
        """Test identical 2-sets: 2 of 4 outcomes collide."""
        family = SetFamily.of([[0, 1], [0, 1]])

        assert pair_event_probability(family, 0, 1) == Fraction(1, 2)

    def test_three_by_four(self):
        """Test sizes 3 and 4 sharing 2 elements: 2/12."""
        family = SetFamily.of([[0, 1, 2], [1, 2, 5, 6]])

        assert pair_event_probability(family, 0, 1) == Fraction(1, 6)

    def test_empty_set_is_domain_error(self):
        """Test that an empty set has no uniform pick."""
        with pytest.raises(DomainError):
            pair_event_probability(SetFamily.of([[0], []]), 0, 1)

    def test_same_index_rejected(self):
        """Test that i == j is rejected."""
        with pytest.raises(InputError):
            pair_event_probability(SetFamily.of([[0], [1]]), 1, 1)

    def test_matches_enumeration(self):
        """Test exact agreement with outcome enumeration on 200 random pairs."""
        rng = random.Random(5)
        for _ in range(200):
            left = rng.sample(range(12), rng.randint(1, 8))
            right = rng.sample(range(12), rng.randint(1, 8))
            family = SetFamily.of([left, right])
            collisions = sum(1 for x, y in product(left, right) if x == y)

            assert pair_event_probability(family, 0, 1) == Fraction(collisions, len(left) * len(right))


@pytest.mark.unit
class TestDependencyDigraph:
    """Test build_dependency_digraph."""

    def test_two_indices(self):
        """Test n=2: one event, no neighbours."""
        digraph = build_dependency_digraph(2)

        assert digraph.events == ((0, 1),)
        assert digraph.neighbours == ((),)

    def test_three_indices(self):
        """Test n=3: 3 events with 2 neighbours each."""
        digraph = build_dependency_digraph(3)

        assert len(digraph.events) == 3
        assert all(len(row) == 2 for row in digraph.neighbours)

    def test_four_indices(self):
        """Test n=4: 6 events with 4 neighbours each."""
        digraph = build_dependency_digraph(4)

        assert len(digraph.events) == 6
        assert all(len(row) == 4 for row in digraph.neighbours)

    def test_neighbour_count_up_to_fifty(self):
        """Test every event has exactly 2n - 4 neighbours for 2 <= n <= 50."""
        for n in range(2, 51):
            digraph = build_dependency_digraph(n)

            assert len(digraph.events) == n * (n - 1) // 2
            assert all(len(row) == 2 * n - 4 for row in digraph.neighbours)

    def test_adjacency_symmetric_and_shares_index(self):
        """Test symmetry and the shared-index rule."""
        digraph = build_dependency_digraph(6)
        for k, row in enumerate(digraph.neighbours):
            for j in row:
                assert k in digraph.neighbours[j]
                assert set(digraph.events[k]) & set(digraph.events[j])

    def test_max_degree(self):
        """Test the largest neighbourhood is 2n - 4, and 0 for a single event."""
        assert build_dependency_digraph(2).max_degree == 0
        assert build_dependency_digraph(9).max_degree == 14

    def test_event_id_lookup(self):
        """Test finding an event by its indices in either order."""
        digraph = build_dependency_digraph(4)

        assert digraph.events[digraph.event_id(3, 1)] == (1, 3)

    def test_too_few_indices(self):
        """Test n < 2 is a domain error."""
        with pytest.raises(DomainError):
            build_dependency_digraph(1)


@pytest.mark.unit
class TestSymmetricCorollary:
    """Test check_symmetric_corollary."""

    def test_zero_probability(self):
        """Test p=0 always holds."""
        report = check_symmetric_corollary(0, 100)

        assert report.holds
        assert report.lhs == 0

    def test_boundary_holds(self):
        """Test p=1/(2e), d=1 sits on the boundary and holds."""
        report = check_symmetric_corollary(1 / (2 * math.e), 1)

        assert report.holds
        assert report.lhs == pytest.approx(1.0)

    def test_fails(self):
        """Test p=0.5, d=3 gives lhs 2e."""
        report = check_symmetric_corollary(0.5, 3)

        assert not report.holds
        assert report.lhs == pytest.approx(2 * math.e)

    def test_probability_out_of_range(self):
        """Test p outside [0, 1] is a domain error."""
        with pytest.raises(DomainError):
            check_symmetric_corollary(1.5, 1)


@pytest.mark.unit
class TestGeneralLll:
    """Test check_general_lll."""

    def test_all_zero_probabilities(self):
        """Test that impossible events always pass."""
        digraph = build_dependency_digraph(4)
        cert = LllCertificate((0,) * 6, (0.3,) * 6, digraph)

        assert check_general_lll(cert).holds

    def test_single_event_boundary(self):
        """Test one event with x=p=1/2: slack 0, empty product."""
        cert = LllCertificate((0.5,), (0.5,), build_dependency_digraph(2))
        check = check_general_lll(cert)

        assert check.holds
        assert check.min_slack == 0
        assert check.worst_event == 0
        assert check.avoid_all_lower_bound == 0.5

    def test_symmetric_five(self):
        """Test n=5 (d=6) with x=1/7 and p=1/(7e)."""
        cert = symmetric_certificate(5, 1 / (7 * math.e))
        check = check_general_lll(cert)

        assert cert.weights[0] == pytest.approx(1 / 7)
        assert check.holds
        assert check.min_slack > 0

    def test_failing_certificate_names_worst_event(self):
        """Test a failing event and the reported worst event."""
        digraph = build_dependency_digraph(3)
        cert = LllCertificate((0.01, 0.9, 0.01), (0.1, 0.1, 0.1), digraph)
        check = check_general_lll(cert)

        assert not check.holds
        assert check.worst_event == 1
        assert check.min_slack < 0

    def test_weight_must_be_below_one(self):
        """Test that x=1 is rejected."""
        with pytest.raises(DomainError):
            LllCertificate((0.5,), (1.0,), build_dependency_digraph(2))


@pytest.mark.unit
class TestTheorem2:
    """Test check_theorem2 and theorem2_condition."""

    def test_three_sets_meeting_once(self):
        """Test n=3, m=1, l=3: 3e <= 9."""
        report = theorem2_condition(3, 3, 1)

        assert report.holds
        assert report.lhs == pytest.approx(3 * math.e)
        assert report.rhs == 9

    def test_disjoint_sets_hold(self):
        """Test m=0 always holds."""
        for n in range(2, 30):
            assert theorem2_condition(n, 1, 0).holds

    def test_single_and_empty(self):
        """Test the n=1 and n=0 conventions."""
        assert theorem2_condition(1, 1, 0).holds
        assert theorem2_condition(0, 0, 0).holds

    def test_empty_set_domain_error(self):
        """Test that an empty set in the family is reported with its index."""
        stats = family_stats(SetFamily.of([[0], []]))
        with pytest.raises(DomainError) as exc_info:
            check_theorem2(stats)

        assert exc_info.value.details["index"] == 1

    def test_from_stats(self, fano_family):
        """Test the Fano lines: e * 11 > 9 fails."""
        report = check_theorem2(family_stats(fano_family))

        assert not report.holds
        assert report.inputs["n"] == 7

    def test_degree_threshold_chain(self):
        """Test l^2 = ceil(2en), m=1 holds for 2 <= n <= 10^4."""
        for n in range(2, 10_001):
            l = math.sqrt(math.ceil(2 * math.e * n))

            assert theorem2_condition(n, l, 1).holds

    def test_monotone(self):
        """Test the verdict never flips the wrong way on a parameter grid."""
        for n in range(2, 27):
            for l in range(0, 20):
                for m in range(0, 20):
                    if theorem2_condition(n, l, m).holds:
                        assert theorem2_condition(n, l + 1, m).holds
                        if m > 0:
                            assert theorem2_condition(n, l, m - 1).holds
                        if n > 2:
                            assert theorem2_condition(n - 1, l, m).holds

    def test_checkers_are_consistent(self):
        """Test the condition implies the corollary and the general lemma."""
        for n in range(2, 51):
            for l in range(1, 40):
                for m in (1, 2, 3):
                    if not theorem2_condition(n, l, m).holds:
                        continue
                    p = m / (l * l)

                    assert check_symmetric_corollary(p, 2 * n - 4).holds
                    assert check_general_lll(symmetric_certificate(n, p)).holds

    def test_tie_tolerance(self):
        """Test ties within 1e-12 relative count as holding."""
        assert leq_with_tolerance(1.0 + 1e-14, 1.0)
        assert not leq_with_tolerance(1.0 + 1e-9, 1.0)


@pytest.mark.unit
class TestCertificates:
    """Test the certificate builders and max_family_size."""

    def test_family_certificate_passes_when_condition_holds(self):
        """Test the exact-probability certificate passes whenever the condition holds."""
        for seed in range(50):
            n = 2 + seed % 7
            l = math.ceil(math.sqrt(math.e * (2 * n - 3)))
            family = gen_family(n, l, 1, universe=200, seed=seed)

            assert check_theorem2(family_stats(family)).holds
            assert check_general_lll(family_certificate(family)).holds

    def test_family_certificate_beats_uniform_bound(self):
        """Test one likely event among disjoint sets: uniform bound fails, exact passes."""
        family = SetFamily.of([[0, 1, 2, 3], [0, 1, 2, 3], [10, 11, 12, 13], [20, 21, 22, 23]])

        assert not check_theorem2(family_stats(family)).holds
        assert check_general_lll(family_certificate(family)).holds

    def test_max_family_size(self):
        """Test the largest n for l=11, m=1 is 23."""
        assert max_family_size(11, 1) == 23
        assert theorem2_condition(23, 11, 1).holds
        assert not theorem2_condition(24, 11, 1).holds

    def test_max_family_size_edges(self):
        """Test m=0 is unbounded and l=0 admits nothing."""
        assert max_family_size(3, 0) is None
        assert max_family_size(0, 1) == 0
