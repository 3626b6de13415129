from abc import ABC, abstractmethod

from hpfg.FiniteField.ff_core import as_modulus
from hpfg.GraphSystems.system_instance import SolutionSet
from hpfg.Util.param_util import ShapeError, ModulusMismatchError

_SUPPORTED_SOLVERS = ["brute_force", "quadratic", "cubic"]


class SolverBase(ABC):
    """Solver of the systems Phi^(n)(b) x = w over a fixed prime field."""

    # (n, k) accepted by the solver, None for any
    shape = None

    def __init__(self, p):
        """

        :param p: modulus, PrimeModulus or int
        """
        self._modulus = as_modulus(p)

    @property
    def modulus(self):
        return self._modulus

    @property
    def p(self):
        return self._modulus.p

    @abstractmethod
    def solve(self, instance):
        """Solution set of a system.

        :param instance: SystemInstance
        :return: SolutionSet
        """
        pass

    def _check_instance(self, instance):
        """Raises if the instance does not belong to this solver."""
        if instance.modulus != self._modulus:
            raise ModulusMismatchError(
                "instance mod %d given to a solver mod %d" % (instance.p, self.p)
            )
        if self.shape is not None and (instance.n, instance.k) != self.shape:
            raise ShapeError(
                "%s solves n, k = %s, got n=%s, k=%s"
                % (self.__class__.__name__, self.shape, instance.n, instance.k)
            )

    def _verified(self, instance, candidates, branch):
        """Keeps the candidates solving the original system.

        :param candidates: iterable of k-tuples of residues
        :param branch: name recorded on the solution set
        :return: SolutionSet
        """
        return SolutionSet(
            [b for b in candidates if instance.is_solution(b)], self._modulus, branch=branch
        )
