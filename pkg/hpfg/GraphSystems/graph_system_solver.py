from hpfg.FiniteField.ff_core import as_modulus
from hpfg.GraphSystems.SolverTypes.brute_force import BruteForceSolver
from hpfg.GraphSystems.SolverTypes.quadratic_solver import QuadraticSolver
from hpfg.GraphSystems.SolverTypes.cubic_solver import CubicSolver
from hpfg.GraphSystems.SolverTypes.solver_base import _SUPPORTED_SOLVERS
from hpfg.GraphSystems.system_instance import SystemInstance
from hpfg.Util.param_util import ConfigError

"""Keyword access to the solvers of the power-map systems."""


class GraphSystemSolver(object):
    def __init__(self, p, solver_type="auto", **kwargs_solver):
        """

        :param p: modulus, PrimeModulus or int
        :param solver_type: 'brute_force', 'quadratic', 'cubic' or 'auto'; 'auto' picks the
         closed-form solver for n = k = 2 and n = k = 3 and brute force otherwise
        :type solver_type: str
        :param kwargs_solver: keyword arguments of the solver class; the cubic solver takes
         'rng' (seed or numpy Generator used for root splitting)
        """
        self._modulus = as_modulus(p)
        self.solver_type = solver_type
        self._kwargs_solver = kwargs_solver
        if solver_type == "brute_force":
            self._solvers = {None: BruteForceSolver(self._modulus)}
        elif solver_type == "quadratic":
            self._solvers = {(2, 2): QuadraticSolver(self._modulus)}
        elif solver_type == "cubic":
            self._solvers = {(3, 3): CubicSolver(self._modulus, **kwargs_solver)}
        elif solver_type == "auto":
            self._solvers = {
                (2, 2): QuadraticSolver(self._modulus),
                (3, 3): CubicSolver(self._modulus, **kwargs_solver),
                None: BruteForceSolver(self._modulus),
            }
        else:
            raise ConfigError(
                "solver type %s not supported. Chose among %s or 'auto'."
                % (solver_type, _SUPPORTED_SOLVERS)
            )

    @property
    def modulus(self):
        return self._modulus

    @property
    def p(self):
        return self._modulus.p

    def solver_for(self, n, k):
        """The solver instance handling systems of shape (n, k)."""
        if (n, k) in self._solvers:
            return self._solvers[(n, k)]
        if None in self._solvers:
            return self._solvers[None]
        return list(self._solvers.values())[0]

    def solve(self, instance):
        """

        :param instance: SystemInstance
        :return: SolutionSet
        """
        return self.solver_for(instance.n, instance.k).solve(instance)

    def solve_tuple(self, x, w):
        """Solves Phi^(n)(b) x = w with n = len(w) and k = len(x).

        :return: SolutionSet
        """
        return self.solve(SystemInstance(self._modulus, x, w))


def solve_bruteforce(instance):
    return BruteForceSolver(instance.modulus).solve(instance)


def solve_quadratic(instance):
    return QuadraticSolver(instance.modulus).solve(instance)


def solve_cubic(instance, rng=None):
    return CubicSolver(instance.modulus, rng=rng).solve(instance)
