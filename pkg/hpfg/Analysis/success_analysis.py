"""Exact success probabilities of the measurement from the eta histograms.

For fixed x the final measurement identifies the hidden coefficients with probability
(sum_w sqrt(eta_w^x))^2 / p^(k+n); x itself is uniform, so the total success is
sum_x (sum_w sqrt(eta_w^x))^2 / p^(2k+n).
"""

import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import List, Optional, Tuple

import numpy as np

from hpfg.Analysis.eta_histogram import (
    EtaHistogram,
    eta_array,
    eta_histogram_forward,
    projective_representatives,
)
from hpfg.FiniteField.ff_core import as_modulus
from hpfg.GraphSystems.cubic_coefficients import is_good_pair
from hpfg.Util.param_util import BRUTE_FORCE_GUARD, ConfigError, check_guard
from hpfg.Util.parallel_util import merge_counts, partitioned_map

logger = logging.getLogger(__name__)

_SUPPORTED_MODES = ["full", "paper_restricted"]


@dataclass
class SuccessReport:
    p: int
    n: int
    k: int
    mode: str
    total_success: float
    restricted_success: Optional[float]
    paper_bound: Optional[float]
    rays: int
    good_x: int
    per_x: List[Tuple[Tuple[int, ...], float]] = field(default_factory=list)

    @property
    def success(self):
        """Success probability of the requested mode."""
        if self.mode == "paper_restricted":
            return self.restricted_success
        return self.total_success

    def checks(self):
        """Consistency checks of the report, name -> bool."""
        checks = {"unit_interval": 0.0 <= self.total_success <= 1.0 + 1e-12}
        if self.restricted_success is not None:
            checks["restricted_le_total"] = self.restricted_success <= self.total_success + 1e-12
            checks["restricted_ge_paper_bound"] = (
                self.restricted_success >= self.paper_bound - 1e-12
            )
        return checks


def per_x_success(histogram):
    """Probability of identifying the hidden coefficients after measuring x.

    :param histogram: EtaHistogram
    :return: (sum_h N_h sqrt(h))^2 / p^(k+n)
    """
    return histogram.sqrt_sum() ** 2 / float(histogram.p ** (histogram.k + histogram.n))


def is_good_x(x, p):
    """Whether x belongs to the cases kept by the closed-form bounds.

    For k = 2: x_1, x_2 != 0 and x_1 + x_2 != 0. For k = 3: x_1 != 0 and the normalized
    pair (x_2 / x_1, x_3 / x_1) passes the disequalities of the cubic elimination.

    :param x: 2- or 3-tuple
    :param p: modulus as int
    :return: bool
    """
    x = [int(value) % p for value in x]
    if len(x) == 2:
        return x[0] != 0 and x[1] != 0 and (x[0] + x[1]) % p != 0
    if len(x) == 3:
        if x[0] == 0:
            return False
        scale = pow(x[0], p - 2, p)
        return is_good_pair(x[1] * scale % p, x[2] * scale % p, p)
    raise ConfigError("good x are only defined for k = 2 and k = 3, got k = %d" % len(x))


def quadratic_bound(p, exact=False):
    """(p^2 - 3p + 2) (p (p + 1) / 2)^2 / p^6, the quadratic lower bound."""
    value = Fraction((p * p - 3 * p + 2) * (p * (p + 1)) ** 2, 4 * p**6)
    return value if exact else float(value)


def cubic_bound(p, exact=False):
    """(p - 1)(p - 4)^2 / (100 p^3), the cubic lower bound."""
    value = Fraction((p - 1) * (p - 4) ** 2, 100 * p**3)
    return value if exact else float(value)


def paper_bound(p, n, exact=False):
    if n == 2:
        return quadratic_bound(p, exact=exact)
    if n == 3:
        return cubic_bound(p, exact=exact)
    return None


def _ray_counts(representatives, p, n, with_per_x=False):
    """Histogram multiplicities over a part of the projective representatives."""
    counts = {}
    per_x = []
    k = representatives.shape[1]
    for x in representatives:
        x = tuple(int(value) for value in x)
        histogram = eta_histogram_forward(x, n, p)
        good = is_good_x(x, p) if k in (2, 3) and n == k else False
        key = (histogram.key, good)
        counts[key] = counts.get(key, 0) + 1
        if with_per_x:
            per_x.append((x, per_x_success(histogram)))
    return counts, per_x


def total_success(p, n, k=None, mode="full", jobs=1, per_x=False):
    """Exact success probability summed over all x.

    Each line {lambda x} is enumerated once through a representative and weighted by
    p - 1; x = 0 adds p^k. Histograms are merged as integer multiplicities, so the
    result does not depend on jobs.

    :param p: modulus
    :param n: degree
    :param k: copy count, defaults to n (only k = n is supported)
    :param mode: 'full' or 'paper_restricted'; selects SuccessReport.success
    :param jobs: worker processes
    :param per_x: include the per-x probabilities of the representatives
    :return: SuccessReport
    """
    p = as_modulus(p).p
    k = n if k is None else int(k)
    if mode not in _SUPPORTED_MODES:
        raise ConfigError("mode %s not supported. Chose among %s." % (mode, _SUPPORTED_MODES))
    if k != n:
        raise ConfigError("success analysis needs k = n, got n=%d, k=%d" % (n, k))
    if mode == "paper_restricted" and n not in (2, 3):
        raise ConfigError("paper_restricted mode needs n = 2 or n = 3, got n=%d" % n)
    if p == 3 and n in (2, 3):
        warnings.warn("the closed-form success bounds are vacuous at p = 3")
    rays = (p**k - 1) // (p - 1)
    check_guard(rays * p**k, BRUTE_FORCE_GUARD * 100, what="success enumeration")
    representatives = projective_representatives(p, k)
    logger.info("success analysis p=%d n=%d: %d rays", p, n, rays)
    results = partitioned_map(
        partial(_ray_counts, p=p, n=n, with_per_x=per_x), representatives, jobs=jobs
    )
    counts = merge_counts(result[0] for result in results)
    per_x_values = [item for result in results for item in result[1]]

    norm = float(p ** (2 * k + n))
    total = float(p**k)
    restricted = 0.0
    good_rays = 0
    for (key, good), multiplicity in counts.items():
        histogram = EtaHistogram((0,) * k, dict(key), p, n)
        term = (p - 1) * multiplicity * histogram.sqrt_sum() ** 2
        total += term
        if good:
            restricted += term
            good_rays += multiplicity
    bound = paper_bound(p, n)
    return SuccessReport(
        p=p,
        n=n,
        k=k,
        mode=mode,
        total_success=total / norm,
        restricted_success=restricted / norm if bound is not None else None,
        paper_bound=bound,
        rays=rays,
        good_x=good_rays * (p - 1),
        per_x=per_x_values,
    )


@dataclass
class EtaBoundReport:
    p: int
    max_eta: int
    good_pairs: int
    argmax: Optional[Tuple[int, ...]]

    @property
    def holds(self):
        return self.max_eta <= 10


def verify_eta_bound(p):
    """Largest eta over all good pairs (x, y) and all lambda of the normalized cubic
    system with kappa = (1, x, y).

    :param p: modulus
    :return: EtaBoundReport; argmax holds (x, y, u, v, w) of one maximizer
    """
    p = as_modulus(p).p
    check_guard(p**5, BRUTE_FORCE_GUARD, what="eta bound sweep p^5")
    best, argmax, pairs = 0, None, 0
    for x in range(p):
        for y in range(p):
            if not is_good_pair(x, y, p):
                continue
            pairs += 1
            eta = eta_array((1, x, y), 3, p)
            label = int(np.argmax(eta))
            if eta[label] > best:
                best = int(eta[label])
                u, rest = divmod(label, p * p)
                v, w = divmod(rest, p)
                argmax = (x, y, u, v, w)
    logger.info("eta bound p=%d: max eta %d over %d good pairs", p, best, pairs)
    return EtaBoundReport(p=p, max_eta=best, good_pairs=pairs, argmax=argmax)
