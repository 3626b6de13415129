import numpy as np
import pytest
from hpfg.Analysis.oracle_check import (
    BRANCH_CAPS,
    verify_cubic_solver,
    verify_quadratic_solver,
)
from hpfg.GraphSystems.SolverTypes.brute_force import BruteForceSolver
from hpfg.GraphSystems.SolverTypes.cubic_solver import BRANCHES, CubicSolver
from hpfg.GraphSystems.SolverTypes.quadratic_solver import QuadraticSolver
from hpfg.GraphSystems.cubic_coefficients import good_pair_count
from hpfg.GraphSystems.system_instance import SystemInstance, phi_apply
from hpfg.Util.param_util import GuardExceededError, ModulusMismatchError, ShapeError


class TestBruteForce(object):
    def test_example(self):
        solution_set = BruteForceSolver(5).solve(SystemInstance(5, (1, 2), (0, 4)))
        assert solution_set.solutions == ((1, 2), (4, 3))
        assert solution_set.eta == 2
        assert solution_set.branch == "brute_force"

    def test_zero_x(self):
        solver = BruteForceSolver(7)
        assert solver.solve(SystemInstance(7, (0, 0), (0, 0))).eta == 49
        assert solver.solve(SystemInstance(7, (0, 0), (1, 0))).eta == 0

    def test_any_shape(self):
        solver = BruteForceSolver(5)
        instance = SystemInstance(5, (1, 1, 1, 1), (2, 2))
        solution_set = solver.solve(instance)
        assert all(instance.is_solution(b) for b in solution_set)
        assert (1, 1, 0, 0) in solution_set

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            BruteForceSolver(101).solve(SystemInstance(101, (1, 1, 1, 1), (0, 0)))


class TestQuadraticSolver(object):
    def setup_method(self):
        self.solver = QuadraticSolver(5)

    def test_generic(self):
        solution_set = self.solver.solve(SystemInstance(5, (1, 2), (0, 4)))
        assert solution_set.to_list() == [[1, 2], [4, 3]]
        assert solution_set.branch == "generic"

    def test_zero_discriminant(self):
        # (x/y)(w(x+y) - v^2) vanishes, one solution
        solution_set = self.solver.solve(SystemInstance(5, (1, 2), (3, 3)))
        assert solution_set.solutions == ((1, 1),)
        assert solution_set.eta == 1

    def test_one_zero(self):
        solution_set = self.solver.solve(SystemInstance(5, (1, 0), (2, 4)))
        assert solution_set.eta == 5
        assert solution_set.branch == "one_zero"
        assert all(b == 2 for b, _ in solution_set)
        assert self.solver.solve(SystemInstance(5, (1, 0), (2, 3))).eta == 0
        assert self.solver.solve(SystemInstance(5, (0, 3), (3, 3))).eta == 5

    def test_opposite(self):
        solution_set = self.solver.solve(SystemInstance(5, (1, 4), (2, 3)))
        assert solution_set.eta == 1
        assert solution_set.branch == "opposite"
        assert self.solver.solve(SystemInstance(5, (1, 4), (0, 0))).eta == 5
        assert self.solver.solve(SystemInstance(5, (1, 4), (0, 1))).eta == 0

    def test_zero_x(self):
        assert self.solver.solve(SystemInstance(5, (0, 0), (0, 0))).eta == 25
        assert self.solver.solve(SystemInstance(5, (0, 0), (0, 1))).eta == 0

    def test_wrong_instance(self):
        with pytest.raises(ShapeError):
            self.solver.solve(SystemInstance(5, (1, 2, 3), (1, 2, 3)))
        with pytest.raises(ModulusMismatchError):
            self.solver.solve(SystemInstance(7, (1, 2), (0, 4)))

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_exhaustive(self, p):
        report = verify_quadratic_solver(p)
        assert report.instances == p**4
        assert report.mismatches == 0, report.examples
        assert report.max_eta_good <= 2
        assert all(report.checks().values())


class TestCubicSolver(object):
    def test_planted(self):
        p = 11
        x = (1, 2, 4)
        w = phi_apply((1, 2, 3), x, 3, p)
        solution_set = CubicSolver(p).solve(SystemInstance(p, x, w))
        assert (1, 2, 3) in solution_set
        assert solution_set.branch in BRANCHES

    def test_matches_brute_force_on_random_instances(self):
        p = 13
        rng = np.random.default_rng(17)
        solver = CubicSolver(p, rng=rng)
        oracle = BruteForceSolver(p)
        for _ in range(200):
            instance = SystemInstance(p, rng.integers(0, p, size=3), rng.integers(0, p, size=3))
            assert solver.solve(instance) == oracle.solve(instance)

    def test_fallback(self):
        solver = CubicSolver(7)
        zero = solver.solve(SystemInstance(7, (0, 0, 0), (0, 0, 0)))
        assert zero.eta == 343
        assert zero.branch == "fallback"
        assert solver.solve(SystemInstance(7, (0, 0, 0), (0, 1, 0))).eta == 0
        # x_1 = 0 cannot be normalized
        instance = SystemInstance(7, (0, 1, 2), (3, 4, 5))
        assert solver.solve(instance) == BruteForceSolver(7).solve(instance)
        assert solver.solve(instance).branch == "fallback"
        # bad pair y = -x
        instance = SystemInstance(7, (1, 2, 5), (1, 1, 1))
        assert solver.solve(instance).branch == "fallback"
        assert solver.solve(instance) == BruteForceSolver(7).solve(instance)

    def test_wrong_shape(self):
        with pytest.raises(ShapeError):
            CubicSolver(7).solve(SystemInstance(7, (1, 2), (1, 2)))

    def test_exhaustive_p7(self):
        report = verify_cubic_solver(7, rng=0)
        assert report.instances == 7**5
        assert report.mismatches == 0, report.examples
        assert report.label_disagreements == 0
        assert report.max_eta_good <= 10
        for branch, cap in BRANCH_CAPS.items():
            assert report.branch_max_eta.get(branch, 0) <= cap
        assert sum(report.branch_counts.values()) == report.instances
        assert report.branch_counts["regular"] > 0
        assert all(report.checks().values())

    def test_exhaustive_p11(self):
        report = verify_cubic_solver(11, rng=0)
        assert report.instances == 11**5
        assert report.mismatches == 0, report.examples
        assert all(report.checks().values())

    @pytest.mark.slow
    def test_exhaustive_p13(self):
        p = 13
        report = verify_cubic_solver(p, rng=0)
        assert report.instances == p**5
        assert report.mismatches == 0, report.examples
        assert report.label_disagreements == 0
        assert report.max_eta_good <= 6
        for branch, cap in BRANCH_CAPS.items():
            assert report.branch_max_eta.get(branch, 0) <= cap
        # every instance of a bad pair goes through the fallback
        assert report.branch_counts["fallback"] == (p * p - good_pair_count(p)) * p**3
        assert all(report.checks().values())


if __name__ == "__main__":
    pytest.main()
