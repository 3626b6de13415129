import numpy as np
from numpy import testing as npt
import pytest
from hpfg.Analysis.fidelity import (
    all_polynomials,
    fidelity_exact,
    gram_matrix,
    intersection_counts,
    support_fidelity_bound,
    support_bound_check,
    max_fidelity,
    polynomial_values,
    random_density_matrix,
)
from hpfg.QuantumSim.density_operator import polynomial_function_state
from hpfg.Util.param_util import ConfigError, GuardExceededError


def test_polynomial_values():
    npt.assert_array_equal(polynomial_values((1, 1), 5), [0, 2, 1, 2, 0])
    npt.assert_array_equal(polynomial_values((0, 0), 5), np.zeros(5))


def test_gram_counting_identity():
    p = 7
    for q, q_tilde in [((1, 2), (3, 4)), ((0, 1), (0, 0)), ((5, 0, 1), (2, 2, 2))]:
        gram = gram_matrix(q, q_tilde, p)
        npt.assert_almost_equal((p * gram).sum(), p**2, decimal=12)
        assert intersection_counts(q, q_tilde, p).sum() == p


def test_linear_difference():
    report = fidelity_exact((1, 1), (0, 1), 5)
    npt.assert_allclose(report.gram, np.full((5, 5), 0.2))
    npt.assert_almost_equal(report.fidelity, 0.2, decimal=12)
    assert report.fidelity <= 1 / np.sqrt(5)
    assert report.max_intersections == 1
    assert all(report.checks().values())


def test_matches_dense_fidelity():
    p = 5
    for q, q_tilde in [((1, 2), (3, 1)), ((0, 1), (4, 0)), ((2, 2), (2, 3))]:
        rho = polynomial_function_state(q, p).matrix
        sigma = polynomial_function_state(q_tilde, p).matrix
        dense, _ = support_fidelity_bound(rho, sigma)
        npt.assert_almost_equal(fidelity_exact(q, q_tilde, p).fidelity, dense, decimal=10)


@pytest.mark.parametrize("p", [5, 7])
def test_fidelity_all_pairs(p):
    bound = 2 / np.sqrt(p)
    polynomials = all_polynomials(p, 2)
    assert len(polynomials) == p**2
    for q in polynomials:
        for q_tilde in polynomials:
            if q == q_tilde:
                continue
            report = fidelity_exact(q, q_tilde, p)
            assert report.max_intersections <= 2
            assert report.fidelity <= bound + 1e-12
            assert report.fidelity <= report.support_bound + 1e-12
    fidelity, argmax = max_fidelity(p, 2)
    assert fidelity <= bound + 1e-12
    assert argmax != (0, 0)


def test_fidelity_errors():
    with pytest.raises(ConfigError):
        fidelity_exact((1, 2), (1, 2), 5)
    with pytest.raises(ConfigError):
        fidelity_exact((1, 2), (6, 7, 0), 5)
    with pytest.raises(GuardExceededError):
        fidelity_exact((1,), (2,), 521)


def test_random_density_matrix():
    rng = np.random.default_rng(0)
    rho, spectrum, unitary = random_density_matrix(4, rng, rank=2)
    npt.assert_almost_equal(np.trace(rho).real, 1, decimal=12)
    npt.assert_allclose(unitary @ unitary.conj().T, np.eye(4), atol=1e-12)
    assert np.count_nonzero(spectrum) == 2
    npt.assert_allclose(rho @ unitary[:, 0], spectrum[0] * unitary[:, 0], atol=1e-12)


def test_support_bound():
    rng = np.random.default_rng(1)
    violations, worst = support_bound_check(1000, rng)
    assert violations == 0
    assert worst <= 1e-10
    rho = np.diag([1.0, 0.0])
    fidelity, bound = support_fidelity_bound(rho, rho)
    npt.assert_almost_equal(fidelity, 1, decimal=12)
    npt.assert_almost_equal(bound, 1, decimal=12)


if __name__ == "__main__":
    pytest.main()
