"""Classical hardness: two queries of the black box collide with probability 1/p."""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from hpfg.FiniteField.ff_core import as_modulus
from hpfg.QuantumSim.black_box import BlackBox
from hpfg.Util.param_util import BRUTE_FORCE_GUARD, ConfigError, check_guard, make_rng

logger = logging.getLogger(__name__)

_CHUNK = 2**20


@dataclass
class CollisionReport:
    p: int
    trials: int
    collisions: int
    estimate: float
    expected: float
    sigma: float

    @property
    def within_3_sigma(self):
        return abs(self.estimate - self.expected) <= 3 * self.sigma

    def checks(self):
        return {"within_3_sigma": self.within_3_sigma}


def collision_experiment(p, trials, seed=0, n=2):
    """Monte Carlo estimate of the probability that two queries B(r, s), B(rb, sb) with
    r != rb agree, for a random hidden Q of degree n and a random permutation.

    :param p: modulus
    :param trials: number of sampled query pairs, >= 1
    :param seed: seed or numpy Generator
    :param n: degree of the hidden polynomial
    :return: CollisionReport
    """
    p = as_modulus(p).p
    trials = int(trials)
    if trials < 1:
        raise ConfigError("the collision experiment needs at least one trial")
    rng = make_rng(seed)
    black_box = BlackBox(p, rng.integers(0, p, size=n), rng=rng)
    collisions = 0
    for start in range(0, trials, _CHUNK):
        size = min(_CHUNK, trials - start)
        r = rng.integers(0, p, size=size)
        r_other = (r + rng.integers(1, p, size=size)) % p
        s = rng.integers(0, p, size=size)
        s_other = rng.integers(0, p, size=size)
        first = black_box.query_batch(r, s)
        second = black_box.query_batch(r_other, s_other)
        collisions += int(np.count_nonzero(first == second))
    estimate = collisions / trials
    expected = 1.0 / p
    sigma = np.sqrt(expected * (1 - expected) / trials)
    logger.info("collision experiment p=%d: %d of %d", p, collisions, trials)
    return CollisionReport(
        p=p,
        trials=trials,
        collisions=collisions,
        estimate=estimate,
        expected=expected,
        sigma=float(sigma),
    )


def exhaustive_collision_probability(p, q=(1, 1), permutation=None):
    """Exact collision probability over all query pairs with r != rb.

    :param p: modulus
    :param q: hidden coefficients
    :param permutation: secret bijection, identity when None
    :return: Fraction
    """
    p = as_modulus(p).p
    check_guard(p**4, BRUTE_FORCE_GUARD, what="query pairs p^4")
    black_box = BlackBox(p, q, permutation=np.arange(p) if permutation is None else permutation)
    r, s = np.indices((p, p)).reshape(2, -1)
    outputs = black_box.query_batch(r, s)
    same_output = outputs[:, None] == outputs[None, :]
    different_r = r[:, None] != r[None, :]
    return Fraction(int(np.count_nonzero(same_output & different_r)), int(different_r.sum()))
