"""Forward enumeration of the power map b -> Phi^(n)(b) x and the histograms of the
solution counts eta_w^x it produces."""

import logging
import numpy as np
from hpfg.FiniteField.ff_core import as_modulus
from hpfg.GraphSystems.system_instance import SystemInstance, lex_index
from hpfg.Util.param_util import (
    BRUTE_FORCE_GUARD,
    CheckFailedError,
    ShapeError,
    all_tuples,
    check_guard,
    index_to_tuple,
    tuple_to_index,
)

logger = logging.getLogger(__name__)


def forward_labels(x, n, p):
    """Label of w = Phi^(n)(b) x for every b in F_p^k, b in lexicographic order.

    Labels encode w in base p with w_1 most significant.

    :param x: k-tuple
    :param n: degree
    :param p: modulus as int
    :return: int64 array of length p^k
    """
    x = np.asarray(x, dtype=np.int64) % p
    k = len(x)
    check_guard(p**k, BRUTE_FORCE_GUARD, what="forward enumeration p^k")
    check_guard(p**n, BRUTE_FORCE_GUARD, what="label space p^n")
    b = all_tuples(p, k)
    labels = np.zeros(len(b), dtype=np.int64)
    powers = b.copy()
    for _ in range(n):
        labels = labels * p + (powers * x).sum(axis=1) % p
        powers = powers * b % p
    return labels


def eta_array(x, n, p):
    """eta_w^x for every w in F_p^n, indexed by the lexicographic label of w.

    :return: int64 array of length p^n summing to p^k
    """
    return np.bincount(forward_labels(x, n, p), minlength=p**n)


class EtaHistogram(object):
    """Counts N_h = #{w in F_p^n : eta_w^x = h} for one x."""

    def __init__(self, x, counts, p, n):
        """

        :param x: k-tuple
        :param counts: dict h -> N_h
        :param p: modulus as int
        :param n: degree
        """
        self.x = tuple(int(value) for value in x)
        self.p = int(p)
        self.n = int(n)
        self.k = len(self.x)
        self.counts = {int(h): int(count) for h, count in counts.items() if count != 0}
        if any(count < 0 for count in self.counts.values()):
            raise ValueError("histogram counts must be nonnegative")

    @classmethod
    def from_eta(cls, x, eta, p, n):
        """Histogram of an array of eta values."""
        values, multiplicities = np.unique(np.asarray(eta, dtype=np.int64), return_counts=True)
        return cls(x, dict(zip(values.tolist(), multiplicities.tolist())), p, n)

    @property
    def key(self):
        """Hashable content of the histogram, sorted by h."""
        return tuple(sorted(self.counts.items()))

    @property
    def label_count(self):
        """sum_h N_h, equals p^n."""
        return sum(self.counts.values())

    @property
    def solution_count(self):
        """sum_h h N_h, equals p^k."""
        return sum(h * count for h, count in self.counts.items())

    @property
    def max_eta(self):
        return max(h for h, count in self.counts.items() if count > 0)

    def sqrt_sum(self):
        """sum_w sqrt(eta_w), the only floating point step."""
        return float(sum(count * np.sqrt(h) for h, count in sorted(self.counts.items())))

    def check(self):
        """Raises if the conservation laws are violated."""
        if self.label_count != self.p**self.n:
            raise ShapeError(
                "histogram covers %d labels, expected p^n = %d" % (self.label_count, self.p**self.n)
            )
        if self.solution_count != self.p**self.k:
            raise ShapeError(
                "histogram holds %d solutions, expected p^k = %d"
                % (self.solution_count, self.p**self.k)
            )
        return True

    def __eq__(self, other):
        if not isinstance(other, EtaHistogram):
            return NotImplemented
        return (self.p, self.n, self.k, self.key) == (other.p, other.n, other.k, other.key)

    def __repr__(self):
        return "EtaHistogram(x=%s, counts=%s)" % (self.x, dict(self.key))


def eta_histogram_forward(x, n, p):
    """EtaHistogram of x by forward enumeration of all b in F_p^k.

    :param x: k-tuple
    :param n: degree
    :param p: modulus, int or PrimeModulus
    :return: EtaHistogram
    """
    p = as_modulus(p).p
    x = tuple(int(value) % p for value in x)
    return EtaHistogram.from_eta(x, eta_array(x, n, p), p, n)


def eta_histogram_from_solver(x, n, p, solver):
    """EtaHistogram of x obtained by solving the system for every w.

    :param solver: object with solve(instance), e.g. GraphSystemSolver
    :return: EtaHistogram
    """
    modulus = as_modulus(p)
    p = modulus.p
    check_guard(p**n, BRUTE_FORCE_GUARD, what="label space p^n")
    counts = {}
    for label in range(p**n):
        w = index_to_tuple(label, p, n)
        eta = solver.solve(SystemInstance(modulus, x, w)).eta
        counts[eta] = counts.get(eta, 0) + 1
    return EtaHistogram(x, counts, p, n)


class SolutionTable(object):
    """All solution sets S_w^x of one x, from a single forward enumeration."""

    def __init__(self, x, n, p):
        """

        :param x: k-tuple
        :param n: degree
        :param p: modulus as int
        """
        self.p = as_modulus(p).p
        self.n = int(n)
        self.x = tuple(int(value) % self.p for value in x)
        self.k = len(self.x)
        labels = forward_labels(self.x, self.n, self.p)
        # stable sort keeps each group in lexicographic order of b
        self._order = np.argsort(labels, kind="stable")
        self.eta = np.bincount(labels, minlength=self.p**self.n)
        self._starts = np.concatenate([[0], np.cumsum(self.eta)])

    def label(self, w):
        index = 0
        for value in w:
            index = index * self.p + int(value) % self.p
        return index

    def label_indices(self, label):
        """Lexicographic ranks of the solutions b for the label of w, ascending."""
        return self._order[self._starts[label]:self._starts[label + 1]]

    def solution_indices(self, w):
        """Lexicographic ranks of the solutions b of Phi^(n)(b) x = w, ascending."""
        return self.label_indices(self.label(w))

    def solutions(self, w):
        """Solutions as a list of k-tuples, lexicographically sorted."""
        return [index_to_tuple(int(index), self.p, self.k) for index in self.solution_indices(w)]

    def histogram(self):
        return EtaHistogram.from_eta(self.x, self.eta, self.p, self.n)

    @property
    def order(self):
        """Lexicographic ranks of all b, grouped by label and ordered within each group."""
        return self._order


class SolverSolutionTable(SolutionTable):
    """All solution sets S_w^x of one x, one solver call per right-hand side w.

    The sets returned by the solver must partition F_p^k. Inside the group of w,
    b sits at position lex_index(b, S_w).
    """

    def __init__(self, x, n, p, solver):
        """

        :param x: k-tuple
        :param n: degree
        :param p: modulus as int
        :param solver: object with solve(SystemInstance) -> SolutionSet
        :raises CheckFailedError: when the solution sets do not partition F_p^k
        """
        modulus = as_modulus(p)
        self.p = modulus.p
        self.n = int(n)
        self.x = tuple(int(value) % self.p for value in x)
        self.k = len(self.x)
        size = self.p**self.k
        check_guard(size, BRUTE_FORCE_GUARD, what="solution table p^k")
        check_guard(self.p**self.n, BRUTE_FORCE_GUARD, what="right-hand sides p^n")
        owner = np.full(size, -1, dtype=np.int64)
        self.slots = np.zeros(size, dtype=np.int64)
        self.eta = np.zeros(self.p**self.n, dtype=np.int64)
        for label in range(self.p**self.n):
            w = index_to_tuple(label, self.p, self.n)
            solution_set = solver.solve(SystemInstance(modulus, self.x, w))
            for b in solution_set:
                index = tuple_to_index(b, self.p)
                if owner[index] >= 0:
                    raise CheckFailedError(
                        "%s is reported for two right-hand sides %s and %s"
                        % (b, index_to_tuple(int(owner[index]), self.p, self.n), w)
                    )
                owner[index] = label
                self.slots[index] = lex_index(b, solution_set)
            self.eta[label] = solution_set.eta
        missing = np.flatnonzero(owner < 0)
        if len(missing) > 0:
            raise CheckFailedError(
                "%d tuples b are missing from every solution set, first %s"
                % (len(missing), index_to_tuple(int(missing[0]), self.p, self.k))
            )
        self._starts = np.concatenate([[0], np.cumsum(self.eta)])
        self._order = np.empty(size, dtype=np.int64)
        self._order[self._starts[owner] + self.slots] = np.arange(size)
        logger.debug("solver table for x=%s: max eta %d", self.x, int(self.eta.max()))


def projective_representatives(p, k):
    """One x per line through the origin of F_p^k: the first nonzero entry is 1.

    The scaling x -> lambda x (lambda != 0) leaves the histogram unchanged, so each
    representative stands for p - 1 tuples.

    :return: int64 array of shape ((p^k - 1) / (p - 1), k), lexicographic order
    """
    rows = []
    for leading in range(k):
        tail = all_tuples(p, k - leading - 1)
        block = np.zeros((len(tail), k), dtype=np.int64)
        block[:, leading] = 1
        block[:, leading + 1:] = tail
        rows.append(block)
    rows.reverse()
    return np.concatenate(rows, axis=0)
