"""
Batch trials for the resampling solver.

Trial t generates a family with seed derive_seed(master, 2t) and solves it
with seed derive_seed(master, 2t + 1), so results depend only on the master
seed and the trial index. Parallel runs report in trial order.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import fmean
from typing import List, Optional, Tuple

from src.generators import gen_family
from src.logging_config import get_logger, log_performance
from src.solver import derive_seed, find_transversal_mt

logger = get_logger(__name__)


@dataclass(frozen=True)
class TrialResult:
    trial: int
    resamples: int
    found: bool


@dataclass(frozen=True)
class BenchSummary:
    trials: Tuple[TrialResult, ...]

    @property
    def success_rate(self) -> float:
        if not self.trials:
            return 1.0
        return sum(t.found for t in self.trials) / len(self.trials)

    @property
    def mean_resamples(self) -> float:
        return fmean(t.resamples for t in self.trials) if self.trials else 0.0

    @property
    def all_found(self) -> bool:
        return all(t.found for t in self.trials)


def run_trial(
    trial: int, n: int, l: int, m: int, universe: int, master_seed: int, rounds_cap: Optional[int]
) -> TrialResult:
    family = gen_family(n, l, m, universe, seed=derive_seed(master_seed, 2 * trial))
    outcome = find_transversal_mt(family, seed=derive_seed(master_seed, 2 * trial + 1), rounds_cap=rounds_cap)
    return TrialResult(trial, outcome.resample_count, outcome.found)


@log_performance(logger)
def run_benchmark(
    trials: int,
    n: int,
    l: int,
    m: int,
    universe: int,
    master_seed: int = 0,
    rounds_cap: Optional[int] = None,
    workers: int = 1,
) -> BenchSummary:
    """
    Generate and solve `trials` families with the given parameters.

    Args:
        workers: Worker processes; 1 runs in-process
    """
    args = [(t, n, l, m, universe, master_seed, rounds_cap) for t in range(trials)]
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map() yields in submission order
            results: List[TrialResult] = list(pool.map(run_trial, *zip(*args)))
    else:
        results = [run_trial(*a) for a in args]
    summary = BenchSummary(tuple(results))
    logger.info(
        f"Benchmark of {trials} trials: success rate {summary.success_rate:.3f}, "
        f"mean resamples {summary.mean_resamples:.3f}"
    )
    return summary
