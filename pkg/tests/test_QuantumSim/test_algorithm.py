import numpy as np
from numpy import testing as npt
import pytest
from hpfg.Analysis.eta_histogram import eta_array
from hpfg.Analysis.success_analysis import total_success
from hpfg.FiniteField.ff_core import as_modulus
from hpfg.GraphSystems.system_instance import SolutionSet
from hpfg.QuantumSim.algorithm import AlgorithmReport, _RayEta, run_algorithm
from hpfg.QuantumSim.black_box import BlackBox
from hpfg.QuantumSim.relabeling import default_solver
from hpfg.Util.param_util import CheckFailedError, ConfigError


class EmptySolver(object):
    """Reports no solutions at all."""

    def __init__(self, p):
        self.modulus = as_modulus(p)

    def solve(self, instance):
        return SolutionSet([], self.modulus)
class TestRunAlgorithm(object):
    def setup_method(self):
        self.p = 31
        self.box = BlackBox(self.p, (7, 19), rng=1)

    def test_success_rate(self):
        report = run_algorithm(self.box, 500, seed=0)
        assert report.queries == 2 * 500
        assert report.expected == pytest.approx(total_success(self.p, 2).total_success)
        assert report.expected >= 0.23
        assert all(report.checks().values())
        assert len(report.transcript()) == 500

    def test_determinism(self):
        first = run_algorithm(self.box, 50, seed=4, expected=0.25)
        second = run_algorithm(BlackBox(self.p, (7, 19), rng=1), 50, seed=4, expected=0.25)
        assert first.transcript() == second.transcript()
        assert self.box.queries == 100

    def test_errors(self):
        with pytest.raises(ConfigError):
            run_algorithm(self.box, 0)
        with pytest.raises(ConfigError):
            run_algorithm(self.box, 10, k=3)

    def test_solver_drives_sampling(self):
        with pytest.raises(CheckFailedError):
            run_algorithm(self.box, 5, seed=0, expected=0.25, solver=EmptySolver(self.p))
        box = BlackBox(self.p, (7, 19), rng=1)
        report = run_algorithm(box, 50, seed=4, expected=0.25, solver=default_solver(self.p))
        first = run_algorithm(BlackBox(self.p, (7, 19), rng=1), 50, seed=4, expected=0.25)
        assert report.transcript() == first.transcript()


@pytest.mark.parametrize("x", [(0, 0), (1, 3), (3, 9), (0, 5), (4, 6), (6, 4)])
def test_ray_eta_matches_enumeration(x):
    p = 7
    ray_eta = _RayEta(p, 2, default_solver(p))
    npt.assert_array_equal(ray_eta(x), eta_array(x, 2, p))
    # (3, 9) shares the table of (1, 3)
    ray_eta((1, 3))
    ray_eta((3, 9))
    assert len(ray_eta._tables) <= 2
    assert np.sum(ray_eta(x)) == p**2


def test_report_statistics():
    report = AlgorithmReport(p=5, n=2, k=2, repetitions=100, successes=30, queries=200,
                             expected=0.25)
    assert report.success_rate == 0.3
    assert report.sigma == pytest.approx(0.0433, abs=1e-4)
    assert report.within_3_sigma
    assert report.checks()["queries_per_repetition"]


if __name__ == "__main__":
    pytest.main()
