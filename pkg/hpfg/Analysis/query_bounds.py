import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from hpfg.Analysis.success_analysis import cubic_bound, quadratic_bound
from hpfg.Util.param_util import ConfigError


@dataclass
class QueryBoundReport:
    """Copy counts for distinguishing the polynomial function states of degree n in m
    variables."""

    n: int
    m: int
    p: Optional[int]
    epsilon: float
    states: Optional[int]
    upper: int
    lower: Fraction
    fidelity_bound: Optional[float]
    copies_needed: Optional[int]
    k: Optional[int] = None
    quadratic_bound: Optional[float] = None
    cubic_bound: Optional[float] = None

    def checks(self):
        checks = {"upper_ge_lower": self.upper >= self.lower >= 0}
        if self.k is not None:
            checks["k_ge_lower"] = self.k >= self.lower
        if self.copies_needed is not None:
            checks["copies_ge_lower"] = self.copies_needed >= self.lower
        return checks


def number_of_states(p, n, m):
    """N = p^(C(n+m, n) - 1) polynomials of degree <= n without constant term."""
    return p ** (math.comb(n + m, n) - 1)


def upper_query_bound(n, m):
    """4 C(n+m, m) queries suffice."""
    return 4 * math.comb(n + m, m)


def lower_query_bound(n, m):
    """At least C(n+m, m) / m - 1 copies are needed for success 1/2."""
    return Fraction(math.comb(n + m, m), m) - 1


def fidelity_upper_bound(p, n):
    """n / sqrt(p), bound on the fidelity of two distinct polynomial function states."""
    return n / math.sqrt(p)


def copies_needed(p, n, m, epsilon, fidelity=None):
    """Smallest k with k >= 2 (log N - log epsilon) / (-log F).

    :param fidelity: F, defaults to n / sqrt(p)
    :return: int, or None if F >= 1 (the bound gives nothing)
    """
    if fidelity is None:
        fidelity = fidelity_upper_bound(p, n)
    if not 0 < fidelity < 1:
        return None
    log_states = (math.comb(n + m, n) - 1) * math.log(p)
    return int(math.ceil(2 * (log_states - math.log(epsilon)) / (-math.log(fidelity))))


def analytic_bounds(p=None, n=2, m=1, k=None, epsilon=0.5):
    """Query complexity bounds, with the copy count and the closed-form success bounds
    evaluated at p when given.

    :param p: modulus or None for the p-independent part only
    :param n: degree
    :param m: number of variables
    :param k: copy count of the measurement, defaults to n; the closed-form success
     bounds hold for one variable and k = n only and are left None otherwise
    :param epsilon: allowed error probability in (0, 1)
    :return: QueryBoundReport
    """
    if n < 1 or m < 1:
        raise ConfigError("degree n and variable count m must be >= 1")
    if not 0 < epsilon < 1:
        raise ConfigError("epsilon must lie in (0, 1), got %s" % epsilon)
    k = n if k is None else int(k)
    if k < 1:
        raise ConfigError("copy count k must be >= 1, got %s" % k)
    report = QueryBoundReport(
        n=n,
        m=m,
        p=p,
        epsilon=epsilon,
        states=None,
        upper=upper_query_bound(n, m),
        lower=lower_query_bound(n, m),
        fidelity_bound=None,
        copies_needed=None,
        k=k,
    )
    if p is not None:
        report.states = number_of_states(p, n, m)
        report.fidelity_bound = fidelity_upper_bound(p, n)
        report.copies_needed = copies_needed(p, n, m, epsilon)
        if m == 1 and k == n == 2:
            report.quadratic_bound = quadratic_bound(p)
        elif m == 1 and k == n == 3:
            report.cubic_bound = cubic_bound(p)
    return report
