"""Sampled end-to-end recovery of the hidden coefficients.

Each repetition prepares k copies of rho_Q with k oracle queries, measures the Fourier
register x (uniform over F_p^k) and draws qhat from the exact outcome distribution of
the relabeled measurement. The distribution is built from the solution counts the
solver returns, one solver table per line through the origin, so p is only
limited by the enumeration guard.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from hpfg.Analysis.success_analysis import total_success
from hpfg.FiniteField.ff_core import as_modulus
from hpfg.QuantumSim.measurement import outcome_distribution
from hpfg.QuantumSim.relabeling import default_solver, solver_table
from hpfg.Util.param_util import ConfigError, all_tuples, index_to_tuple, make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasurementOutcome:
    x: Tuple[int, ...]
    q_hat: Tuple[int, ...]
    success: bool


@dataclass
class AlgorithmReport:
    p: int
    n: int
    k: int
    repetitions: int
    successes: int
    queries: int
    expected: float
    outcomes: List[MeasurementOutcome] = field(default_factory=list)

    @property
    def success_rate(self):
        return self.successes / self.repetitions

    @property
    def sigma(self):
        """Binomial standard deviation of the success rate around the exact value."""
        return float(np.sqrt(self.expected * (1 - self.expected) / self.repetitions))

    @property
    def within_3_sigma(self):
        return abs(self.success_rate - self.expected) <= 3 * self.sigma

    def checks(self):
        return {
            "within_3_sigma": self.within_3_sigma,
            "queries_per_repetition": self.queries == self.k * self.repetitions,
        }

    def transcript(self):
        """Rows (repetition, x, q_hat, success) in sampling order."""
        return [
            (index, outcome.x, outcome.q_hat, outcome.success)
            for index, outcome in enumerate(self.outcomes)
        ]


def _query_copies(black_box, k, rng):
    """Evaluates the black box once per copy; the values are discarded."""
    r = rng.integers(0, black_box.p, size=k)
    s = rng.integers(0, black_box.p, size=k)
    black_box.query_batch(r, s)


class _RayEta(object):
    """eta_w^x from one solver table per line: S_w^(lambda x) = S_(w / lambda)^x."""

    def __init__(self, p, n, solver):
        self._modulus = as_modulus(p)
        self._n = n
        self._solver = solver
        self._tables = {}
        self._w = all_tuples(self._modulus.p, n)
        self._weights = self._modulus.p ** np.arange(n - 1, -1, -1, dtype=np.int64)

    def __call__(self, x):
        p = self._modulus.p
        scale = next((value for value in x if value % p), 1)
        inverse = self._modulus.inv(scale)
        ray = tuple(value * inverse % p for value in x)
        if ray not in self._tables:
            self._tables[ray] = solver_table(ray, self._n, p, self._solver).eta
        labels = (self._w * inverse % p) @ self._weights
        return self._tables[ray][labels]


def run_algorithm(black_box, repetitions, seed=0, k=None, expected=None, solver=None):
    """Runs the standard approach followed by the relabeled Fourier measurement.

    :param black_box: BlackBox hiding q
    :param repetitions: number of independent runs, >= 1
    :param seed: seed or numpy Generator
    :param k: copies per run, defaults to n
    :param expected: exact total success probability, computed when None
    :param solver: solver of the systems behind each U_x, defaults to default_solver(p)
    :return: AlgorithmReport
    """
    p, n = black_box.p, black_box.n
    k = n if k is None else int(k)
    repetitions = int(repetitions)
    if repetitions < 1:
        raise ConfigError("the algorithm needs at least one repetition")
    if k != n:
        raise ConfigError("the measurement needs k = n copies, got n=%d, k=%d" % (n, k))
    rng = make_rng(seed)
    if expected is None:
        expected = total_success(p, n, k=k).total_success
    q = black_box.q
    start_queries = black_box.queries
    ray_eta = _RayEta(p, n, default_solver(p) if solver is None else solver)
    cache = {}
    outcomes = []
    successes = 0
    for _ in range(repetitions):
        _query_copies(black_box, k, rng)
        x = tuple(int(value) for value in rng.integers(0, p, size=k))
        if x not in cache:
            distribution = outcome_distribution(q, x, p, eta=ray_eta(x))
            cache[x] = distribution / distribution.sum()
        label = int(rng.choice(p**n, p=cache[x]))
        q_hat = index_to_tuple(label, p, n)
        success = q_hat == q
        successes += int(success)
        outcomes.append(MeasurementOutcome(x=x, q_hat=q_hat, success=success))
    logger.info("algorithm p=%d n=%d: %d of %d runs recovered q", p, n, successes,
                repetitions)
    return AlgorithmReport(
        p=p,
        n=n,
        k=k,
        repetitions=repetitions,
        successes=successes,
        queries=black_box.queries - start_queries,
        expected=float(expected),
        outcomes=outcomes,
    )
