import numpy as np
from numpy import testing as npt
import pytest
from hpfg.Analysis.eta_histogram import SolutionTable, eta_histogram_forward
from hpfg.Analysis.success_analysis import per_x_success
from hpfg.QuantumSim.measurement import (
    dense_outcome_distribution,
    detection_probability_dense,
    fourier_basis,
    fourier_state_copies,
    measure_x_block,
    off_block_residual,
    outcome_distribution,
    reduced_state_from_solver,
    validate_dense_pipeline,
)
from hpfg.GraphSystems.graph_system_solver import GraphSystemSolver
from hpfg.GraphSystems.system_instance import SolutionSet, SystemInstance
from hpfg.Util.param_util import (
    CheckFailedError,
    GuardExceededError,
    ShapeError,
    all_tuples,
    tuple_to_index,
)


@pytest.mark.parametrize("q,p", [((1, 2), 3), ((2, 3), 5), ((1, 1, 2), 3)])
def test_validate_dense_pipeline(q, p):
    report = validate_dense_pipeline(q, p)
    assert report.outcomes == p ** len(q)
    checks = report.checks()
    assert all(checks.values()), checks


def test_detection_probability():
    p = 5
    for q in [(1, 2), (3, 0)]:
        detection = detection_probability_dense(q, (1, 2), p)
        npt.assert_almost_equal(detection, (9 + 4 * np.sqrt(2)) / 25, decimal=10)
        reversed_detection = detection_probability_dense(q, (1, 2), p, completion="reversed")
        npt.assert_almost_equal(reversed_detection, detection, decimal=10)
    npt.assert_almost_equal(detection_probability_dense((4, 1), (0, 0), p), 1 / p**2, decimal=10)


def test_outcome_distribution():
    p, q, x = 5, (2, 3), (1, 3)
    distribution = outcome_distribution(q, x, p)
    npt.assert_almost_equal(distribution.sum(), 1, decimal=12)
    exact = per_x_success(eta_histogram_forward(x, 2, p))
    npt.assert_almost_equal(distribution[tuple_to_index(q, p)], exact, decimal=12)
    npt.assert_allclose(dense_outcome_distribution(q, x, p), distribution, atol=1e-10)
    # changing q shifts the distribution
    shift = np.array([1, 4])
    shifted = outcome_distribution(tuple((np.array(q) + shift) % p), x, p)
    labels = all_tuples(p, 2)
    moved = [tuple_to_index(label, p) for label in (labels + shift) % p]
    npt.assert_allclose(shifted[moved], distribution, atol=1e-12)


def test_single_copy_block():
    p = 5
    rho = fourier_state_copies((0,), p)
    assert off_block_residual(rho, p, 1) < 1e-12
    for x in range(p):
        probability, reduced = measure_x_block(rho, (x,), p)
        npt.assert_almost_equal(probability, 1 / p, decimal=12)
        npt.assert_allclose(probability * reduced.matrix, np.full((p, p), 1 / p**2), atol=1e-12)


def test_reduced_state():
    p, q, x = 3, (1, 2), (2, 1)
    probability, reduced = measure_x_block(fourier_state_copies(q, p), x, p)
    npt.assert_almost_equal(probability, 1 / p**2, decimal=12)
    npt.assert_allclose(reduced.matrix, reduced_state_from_solver(q, x, p).matrix, atol=1e-10)


def test_fourier_basis():
    basis = fourier_basis(3, 2)
    npt.assert_allclose(basis.conj().T @ basis, np.eye(9), atol=1e-12)


def test_errors():
    with pytest.raises(ShapeError):
        reduced_state_from_solver((1, 2), (1,), 5)
    with pytest.raises(ShapeError):
        detection_probability_dense((1, 2, 3), (1, 2), 5)
    with pytest.raises(GuardExceededError):
        fourier_state_copies((1, 2, 3), 5)


class ReversedSolver(object):
    """Answers the system with -w in place of w."""

    def __init__(self, p):
        self._solver = GraphSystemSolver(p, solver_type="brute_force")
        self.modulus = self._solver.modulus

    def solve(self, instance):
        w = tuple(-value for value in instance.w)
        return self._solver.solve(SystemInstance(self.modulus, instance.x, w))


class MergingSolver(ReversedSolver):
    """Reports every solution set as empty except the one of w = 0."""

    def solve(self, instance):
        if any(instance.w):
            return SolutionSet([], self.modulus)
        return self._solver.solve(instance)


def test_pipeline_uses_solver():
    p, q = 3, (1, 2)
    report = validate_dense_pipeline(q, p, solver=ReversedSolver(p))
    assert report.solver_mismatches > 0
    checks = report.checks()
    assert not checks["solver_matches_enumeration"]
    # S_(-w) in place of S_w conjugates Psi
    assert report.reduced_state_error > 1e-3
    with pytest.raises(CheckFailedError):
        validate_dense_pipeline(q, p, solver=MergingSolver(p))


def test_outcome_distribution_from_solver():
    p, q, x = 5, (2, 3), (1, 3)
    reference = outcome_distribution(q, x, p, eta=SolutionTable(x, 2, p).eta)
    npt.assert_allclose(outcome_distribution(q, x, p), reference, atol=1e-12)
    with pytest.raises(CheckFailedError):
        outcome_distribution(q, x, p, solver=MergingSolver(p))


def test_measure_x_block_shapes():
    p = 3
    rho = fourier_state_copies((1, 2), p)
    with pytest.raises(ShapeError):
        measure_x_block(rho, (1,), p)
    with pytest.raises(ShapeError):
        measure_x_block(rho, (1, 2), p, n=3)
    with pytest.raises(ShapeError):
        measure_x_block(rho, (1, 2, 0), p)
    probability, _ = measure_x_block(rho, (4, -1), p)
    npt.assert_almost_equal(probability, 1 / p**2, decimal=12)


if __name__ == "__main__":
    pytest.main()
