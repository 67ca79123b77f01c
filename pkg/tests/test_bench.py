"""
Unit tests for the benchmark harness.
"""

import pytest

from src.bench import BenchSummary, TrialResult, run_benchmark, run_trial


@pytest.mark.unit
class TestBenchSummary:
    """Test BenchSummary statistics."""

    def test_rates(self):
        """Test success rate and mean resamples."""
        summary = BenchSummary((TrialResult(0, 2, True), TrialResult(1, 10, False)))

        assert summary.success_rate == 0.5
        assert summary.mean_resamples == 6
        assert not summary.all_found

    def test_empty(self):
        """Test zero trials."""
        summary = BenchSummary(())

        assert summary.success_rate == 1.0
        assert summary.mean_resamples == 0.0
        assert summary.all_found


@pytest.mark.unit
class TestRunBenchmark:
    """Test run_trial and run_benchmark."""

    def test_trial_deterministic(self):
        """Test a trial depends only on its index and master seed."""
        assert run_trial(3, 8, 6, 1, 100, 42, None) == run_trial(3, 8, 6, 1, 100, 42, None)

    def test_sequential_run(self):
        """Test trials are reported in order and all succeed under the condition."""
        summary = run_benchmark(10, 8, 6, 1, 100, master_seed=1)

        assert [t.trial for t in summary.trials] == list(range(10))
        assert summary.all_found

    def test_workers_match_sequential(self):
        """Test two worker processes reproduce the in-process results."""
        sequential = run_benchmark(6, 8, 6, 1, 100, master_seed=9)
        parallel = run_benchmark(6, 8, 6, 1, 100, master_seed=9, workers=2)

        assert parallel == sequential

    @pytest.mark.slow
    def test_condition_instances_solve_quickly(self):
        """Test 500 trials at n=20, l=11, m=1 all succeed with few resamples on average."""
        summary = run_benchmark(500, 20, 11, 1, 400, master_seed=0)

        assert summary.all_found
        assert summary.mean_resamples <= 20
