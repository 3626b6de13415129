import numpy as np
from numpy import testing as npt
import pytest
from hpfg.QuantumSim.density_operator import (
    DensityOperator,
    build_states,
    fourier_conjugate,
    fourier_matrix,
    graph_state,
    group_registers,
    polynomial_function_state,
    shift_identity_residual,
)
from hpfg.Util.param_util import CheckFailedError, GuardExceededError


def test_graph_states_orthonormal():
    p = 5
    vectors = np.array([graph_state((1, 2), z, p) for z in range(p)])
    npt.assert_allclose(vectors.conj() @ vectors.T, np.eye(p), atol=1e-12)
    # |phi_{Q,0}> has support on (r, r + 2 r^2)
    support = np.flatnonzero(vectors[0])
    r = np.arange(p)
    npt.assert_array_equal(support, r * p + (r + 2 * r**2) % p)


def test_polynomial_function_state():
    p = 5
    rho = polynomial_function_state((1, 2), p)
    npt.assert_almost_equal(rho.trace().real, 1, decimal=12)
    eigenvalues = np.sort(rho.eigenvalues())[::-1]
    npt.assert_allclose(eigenvalues[:p], np.full(p, 1 / p), atol=1e-12)
    npt.assert_allclose(eigenvalues[p:], 0, atol=1e-12)
    assert rho.dims == [p, p]
    assert build_states((1, 2), "mixed", p).dimension == p * p
    npt.assert_allclose(build_states((1, 2), 3, p), graph_state((1, 2), 3, p))


def test_fourier_identity():
    for p in [3, 5, 7]:
        fourier = fourier_matrix(p)
        npt.assert_allclose(fourier @ fourier.conj().T, np.eye(p), atol=1e-12)
        assert shift_identity_residual(p) < 1e-12


def test_fourier_conjugate_and_grouping():
    p = 3
    rho = polynomial_function_state((2,), p)
    conjugated = fourier_conjugate(rho, p)
    npt.assert_almost_equal(conjugated.trace().real, 1, decimal=12)
    pair = rho.tensor_power(2)
    assert pair.dims == [p] * 4
    grouped = group_registers(pair, p, 2)
    npt.assert_allclose(np.sort(grouped.eigenvalues()), np.sort(pair.eigenvalues()), atol=1e-12)
    # entry (r1, x1, r2, x2) moves to (r1, r2, x1, x2)
    vector = np.zeros(p**4)
    vector[((1 * p + 2) * p + 0) * p + 1] = 1
    moved = np.zeros(p**4)
    moved[((1 * p + 0) * p + 2) * p + 1] = 1
    single = DensityOperator.from_vector(vector, dims=[p] * 4)
    npt.assert_almost_equal(group_registers(single, p, 2).expectation(moved), 1, decimal=12)


def test_checks():
    with pytest.raises(CheckFailedError):
        DensityOperator(np.array([[0.5, 1.0], [0.0, 0.5]]))
    with pytest.raises(CheckFailedError):
        DensityOperator(np.eye(2))
    with pytest.raises(CheckFailedError):
        DensityOperator(np.diag([1.5, -0.5]))
    with pytest.raises(ValueError):
        DensityOperator(np.eye(4) / 4, dims=[3, 2])
    with pytest.raises(GuardExceededError):
        polynomial_function_state((1, 2), 67)


if __name__ == "__main__":
    pytest.main()
