"""
Event-driven simulation of the two-state continuous-time Markov chain.

State 1 is left at rate ``alpha`` and state 2 at rate ``beta``; with a single
exit channel per state the competing-exponentials step reduces to drawing
one exponential holding time and flipping the state.

Reproducibility
---------------
Batch estimators split their trajectories into fixed blocks of
:data:`BLOCK_SIZE`.  Block ``k`` of stream ``j`` draws from
``numpy.random.Generator(PCG64(SeedSequence(seed, spawn_key=(j, k))))``, where
stream 0 and 1 are runs started in state 1 and 2, and stream 2 holds the
mixed-start runs of :func:`mean_jump_count`.
The partition does not depend on the number of workers, and counts are
reduced by summation, so serial and parallel runs give identical results.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .decomp import RateMatrix

BLOCK_SIZE = 16384


@dataclass(frozen=True)
class ChainSpec:
    rates: RateMatrix
    horizon: float
    initial_state: int = 1

    def __post_init__(self):
        _check_rates(self.rates)
        _check_horizon(self.horizon)
        if self.initial_state not in (1, 2):
            raise ValueError(f"initial_state must be 1 or 2, got {self.initial_state!r}")


@dataclass(frozen=True)
class TrajectorySummary:
    final_state: int
    jump_count: int
    total_time: float


@dataclass(frozen=True)
class EmpiricalTransitionMatrix:
    """Monte Carlo estimate of ``exp(Qt)``.

    ``counts[i, j]`` is the number of runs started in state ``j + 1`` that
    ended in state ``i + 1`` (column convention, as for
    :class:`~liemarkov.core.MarkovMatrix`).
    """

    counts: np.ndarray
    n_per_column: tuple[int, int]
    estimate: tuple[float, float]
    std_err: tuple[float, float]


@dataclass(frozen=True)
class MeanEstimate:
    mean: float
    std_err: float
    n: int


def _check_rates(rates: RateMatrix) -> None:
    if not (math.isfinite(rates.alpha) and math.isfinite(rates.beta)):
        raise ValueError("rates must be finite")
    if not rates.is_generator:
        raise ValueError(
            f"rates must be nonnegative, got alpha={rates.alpha!r}, beta={rates.beta!r}"
        )


def _check_horizon(horizon: float) -> None:
    if not (math.isfinite(horizon) and horizon >= 0):
        raise ValueError(f"horizon must be finite and >= 0, got {horizon!r}")


def sample_trajectory(spec: ChainSpec, seed: int) -> TrajectorySummary:
    """Simulate one path up to ``spec.horizon``; deterministic given ``seed``."""
    rng = np.random.default_rng(seed)
    rate = {1: spec.rates.alpha, 2: spec.rates.beta}
    state = spec.initial_state
    clock = 0.0
    jumps = 0
    while True:
        r = rate[state]
        if r == 0.0:
            break
        clock += rng.standard_exponential() / r
        if clock > spec.horizon:
            break
        state = 3 - state
        jumps += 1
    return TrajectorySummary(state, jumps, spec.horizon)


def _simulate_block(alpha, beta, horizon, start, rng):
    """Vectorised paths; ``start`` is a boolean array, True meaning state 1."""
    n = start.shape[0]
    in_one = start.copy()
    jumps = np.zeros(n, dtype=np.int64)
    clock = np.zeros(n)
    active = np.arange(n)
    inv_rate = tuple(1.0 / r if r > 0 else math.inf for r in (alpha, beta))
    while active.size:
        scale = np.where(in_one[active], inv_rate[0], inv_rate[1])
        hold = rng.standard_exponential(active.size) * scale
        hold[np.isnan(hold)] = np.inf
        clock[active] += hold
        jumped = clock[active] <= horizon
        active = active[jumped]
        in_one[active] = ~in_one[active]
        jumps[active] += 1
    return in_one, jumps


def _block_sizes(n: int) -> list[int]:
    full, rest = divmod(n, BLOCK_SIZE)
    return [BLOCK_SIZE] * full + ([rest] if rest else [])


def _block_rng(seed: int, stream: int, block: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(stream, block))
    return np.random.Generator(np.random.PCG64(ss))


def _run_blocks(tasks, workers):
    if workers is None or workers <= 1 or len(tasks) <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: t(), tasks))


def empirical_transition(rates: RateMatrix, horizon: float, n_per_state: int,
                         seed: int, workers: int | None = None) -> EmpiricalTransitionMatrix:
    """Estimate ``exp(Q horizon)`` from ``n_per_state`` runs per initial state.

    ``estimate = (a_hat, b_hat)`` where ``a_hat`` is the fraction of state-1
    starts ending in state 2 and ``b_hat`` the fraction of state-2 starts
    ending in state 1.  ``std_err`` holds the binomial standard errors.
    """
    _check_rates(rates)
    _check_horizon(horizon)
    if n_per_state < 1:
        raise ValueError("n_per_state must be >= 1")

    def task(stream, block, size):
        def run():
            rng = _block_rng(seed, stream, block)
            start = np.full(size, stream == 0)
            in_one, _ = _simulate_block(rates.alpha, rates.beta, horizon, start, rng)
            return stream, int(np.count_nonzero(in_one))
        return run

    tasks = [task(stream, k, size)
             for stream in (0, 1)
             for k, size in enumerate(_block_sizes(n_per_state))]
    counts = np.zeros((2, 2), dtype=np.int64)
    for stream, ended_in_one in _run_blocks(tasks, workers):
        counts[0, stream] += ended_in_one
    counts[1] = n_per_state - counts[0]

    a_hat = counts[1, 0] / n_per_state
    b_hat = counts[0, 1] / n_per_state
    se = tuple(math.sqrt(p * (1.0 - p) / n_per_state) for p in (a_hat, b_hat))
    return EmpiricalTransitionMatrix(
        counts=counts,
        n_per_column=(n_per_state, n_per_state),
        estimate=(float(a_hat), float(b_hat)),
        std_err=se,
    )


def mean_jump_count(rates: RateMatrix, horizon: float, initial_distribution=(0.5, 0.5),
                    n: int = 100_000, seed: int = 0,
                    workers: int | None = None) -> MeanEstimate:
    """Monte Carlo mean number of state changes in ``[0, horizon]``.

    Initial states are drawn from ``initial_distribution`` (probabilities of
    states 1 and 2) inside each block, from the block's own stream.
    """
    _check_rates(rates)
    _check_horizon(horizon)
    p1, p2 = (float(p) for p in initial_distribution)
    if min(p1, p2) < 0 or abs(p1 + p2 - 1.0) > 1e-9:
        raise ValueError(f"initial_distribution must be a probability pair, got {(p1, p2)}")
    if n < 2:
        raise ValueError("n must be >= 2")

    def task(block, size):
        def run():
            rng = _block_rng(seed, 2, block)
            start = rng.random(size) < p1
            _, jumps = _simulate_block(rates.alpha, rates.beta, horizon, start, rng)
            return int(jumps.sum()), int((jumps * jumps).sum())
        return run

    tasks = [task(k, size) for k, size in enumerate(_block_sizes(n))]
    total = 0
    total_sq = 0
    for s1, s2 in _run_blocks(tasks, workers):
        total += s1
        total_sq += s2
    mean = total / n
    var = max(total_sq / n - mean * mean, 0.0) * n / (n - 1)
    return MeanEstimate(mean, math.sqrt(var / n), n)
