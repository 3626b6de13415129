"""Exhaustive comparison of the closed-form solvers with forward enumeration."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from hpfg.Analysis.eta_histogram import SolutionTable
from hpfg.FiniteField.ff_core import as_modulus
from hpfg.GraphSystems.SolverTypes.cubic_solver import BRANCHES, CubicSolver
from hpfg.GraphSystems.SolverTypes.quadratic_solver import QuadraticSolver
from hpfg.GraphSystems.cubic_coefficients import (
    CubicEliminationCoefficients,
    Regularity,
    classify_regularity,
    good_pair_count,
    is_good_pair,
)
from hpfg.GraphSystems.system_instance import SystemInstance
from hpfg.Util.param_util import BRUTE_FORCE_GUARD, check_guard, index_to_tuple

logger = logging.getLogger(__name__)

# largest eta each branch of the cubic solver can produce for a good pair
BRANCH_CAPS = {"regular": 6, "vanish1_linear": 6, "vanish1_quartic": 8, "vanish2": 10}


@dataclass
class OracleReport:
    p: int
    n: int
    instances: int = 0
    mismatches: int = 0
    examples: List[Tuple] = field(default_factory=list)
    branch_counts: Dict[str, int] = field(default_factory=dict)
    branch_max_eta: Dict[str, int] = field(default_factory=dict)
    label_disagreements: int = 0
    max_eta_good: int = 0
    good_pairs: int = 0
    count_failures: int = 0

    def record(self, branch, eta, good):
        self.branch_counts[branch] = self.branch_counts.get(branch, 0) + 1
        self.branch_max_eta[branch] = max(self.branch_max_eta.get(branch, 0), eta)
        if good:
            self.max_eta_good = max(self.max_eta_good, eta)

    def checks(self):
        checks = {"no_mismatches": self.mismatches == 0}
        if self.n == 2:
            checks["eta_le_2"] = self.max_eta_good <= 2
            checks["solvable_count"] = self.count_failures == 0
        if self.n == 3:
            checks["labels_agree"] = self.label_disagreements == 0
            checks["eta_le_10"] = self.max_eta_good <= 10
            checks["branch_caps"] = all(
                self.branch_max_eta.get(branch, 0) <= cap for branch, cap in BRANCH_CAPS.items()
            )
        return checks


def _mismatch(report, instance, expected, found, limit=10):
    report.mismatches += 1
    if len(report.examples) < limit:
        report.examples.append((instance.x, instance.w, expected, list(found.solutions)))


def verify_quadratic_solver(p):
    """Compares the quadratic solver with forward enumeration over every (x, w).

    :param p: modulus
    :return: OracleReport
    """
    modulus = as_modulus(p)
    p = modulus.p
    check_guard(p**4, BRUTE_FORCE_GUARD, what="quadratic sweep p^4")
    solver = QuadraticSolver(modulus)
    report = OracleReport(p=p, n=2)
    for x_label in range(p * p):
        x = index_to_tuple(x_label, p, 2)
        table = SolutionTable(x, 2, p)
        good = x[0] != 0 and x[1] != 0 and (x[0] + x[1]) % p != 0
        if good and int(np.count_nonzero(table.eta)) != p * (p + 1) // 2:
            report.count_failures += 1
        for w_label in range(p * p):
            w = index_to_tuple(w_label, p, 2)
            instance = SystemInstance(modulus, x, w)
            found = solver.solve(instance)
            expected = table.solutions(w)
            report.instances += 1
            report.record(found.branch, found.eta, good)
            if list(found.solutions) != expected:
                _mismatch(report, instance, expected, found)
    logger.info("quadratic sweep p=%d: %d instances, %d mismatches", p, report.instances,
                report.mismatches)
    return report


def verify_cubic_solver(p, rng=None, pairs=None):
    """Compares the cubic solver with forward enumeration over all normalized
    (x, y, u, v, w), i.e. kappa = (1, x, y) and every lambda.

    Also records which branch solved each instance, the largest eta per branch and
    whether the regularity label agrees with the solver dispatch.

    :param p: modulus
    :param rng: seed or numpy Generator handed to the solver
    :param pairs: optional iterable of (x, y) restricting the sweep
    :return: OracleReport
    """
    modulus = as_modulus(p)
    p = modulus.p
    check_guard(p**5, BRUTE_FORCE_GUARD, what="cubic sweep p^5")
    solver = CubicSolver(modulus, rng=rng)
    report = OracleReport(p=p, n=3, good_pairs=good_pair_count(p))
    report.branch_counts = dict.fromkeys(BRANCHES, 0)
    if pairs is None:
        pairs = [(x, y) for x in range(p) for y in range(p)]
    for x, y in pairs:
        kappa = (1, x % p, y % p)
        table = SolutionTable(kappa, 3, p)
        good = is_good_pair(x, y, p)
        for label in range(p**3):
            lam = index_to_tuple(label, p, 3)
            instance = SystemInstance(modulus, kappa, lam)
            found = solver.solve(instance)
            expected = table.solutions(lam)
            report.instances += 1
            report.record(found.branch, found.eta, good)
            if list(found.solutions) != expected:
                _mismatch(report, instance, expected, found)
            if good:
                dispatch = CubicEliminationCoefficients(x, y, *lam, modulus).dispatch()
                if classify_regularity(x, y, *lam, modulus) != dispatch:
                    report.label_disagreements += 1
    logger.info("cubic sweep p=%d: %d instances, %d mismatches, branches %s", p,
                report.instances, report.mismatches, report.branch_counts)
    return report


def regularity_census(p):
    """Number of normalized tuples per regularity class.

    :return: dict class name -> count
    """
    modulus = as_modulus(p)
    p = modulus.p
    census = {kind.value: 0 for kind in Regularity}
    for x in range(p):
        for y in range(p):
            for label in range(p**3):
                u, v, w = index_to_tuple(label, p, 3)
                census[classify_regularity(x, y, u, v, w, modulus).kind.value] += 1
    return census
