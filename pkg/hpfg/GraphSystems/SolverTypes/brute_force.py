import numpy as np

from hpfg.GraphSystems.SolverTypes.solver_base import SolverBase
from hpfg.GraphSystems.system_instance import SolutionSet
from hpfg.Util.param_util import BRUTE_FORCE_GUARD, check_guard

_CHUNK = 2**18


class BruteForceSolver(SolverBase):
    """Scans all of F_p^k; the reference for the closed-form solvers."""

    def solve(self, instance):
        """

        :param instance: SystemInstance of any shape with p^k <= BRUTE_FORCE_GUARD
        :return: SolutionSet
        """
        self._check_instance(instance)
        p, k = self.p, instance.k
        size = p**k
        check_guard(size, BRUTE_FORCE_GUARD, what="brute-force scan p^k")
        x = np.array(instance.x, dtype=np.int64)
        w = np.array(instance.w, dtype=np.int64)
        found = []
        for start in range(0, size, _CHUNK):
            labels = np.arange(start, min(start + _CHUNK, size), dtype=np.int64)
            b = np.empty((len(labels), k), dtype=np.int64)
            rest = labels.copy()
            for position in range(k - 1, -1, -1):
                rest, b[:, position] = np.divmod(rest, p)
            match = np.ones(len(labels), dtype=bool)
            powers = b.copy()
            for i in range(instance.n):
                lhs = (powers * x).sum(axis=1) % p
                match &= lhs == w[i]
                powers = powers * b % p
            found.extend(tuple(int(v) for v in row) for row in b[match])
        return SolutionSet(found, self._modulus, branch="brute_force")
