"""Dense states of the standard approach: graph states |phi_{Q,z}>, the polynomial
function states rho_Q and their conjugation by the Fourier transform on the value
register."""

import numpy as np
from scipy.linalg import eigh

from hpfg.FiniteField.ff_core import as_modulus
from hpfg.Util.param_util import DENSE_GUARD, CheckFailedError, check_guard

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


class DensityOperator(object):
    """Density matrix on a product of registers of the given dimensions."""

    def __init__(self, matrix, dims=None, check=True):
        """

        :param matrix: square complex array
        :param dims: register dimensions whose product is the matrix size
        :param check: verify hermiticity, unit trace and positivity
        """
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("density matrix must be square, got shape %s" % (matrix.shape,))
        check_guard(matrix.shape[0], DENSE_GUARD, what="dense dimension")
        self._matrix = matrix
        self.dims = [matrix.shape[0]] if dims is None else [int(d) for d in dims]
        if int(np.prod(self.dims)) != matrix.shape[0]:
            raise ValueError(
                "register dimensions %s do not match size %d" % (self.dims, matrix.shape[0])
            )
        if check:
            self.check()

    @classmethod
    def from_vector(cls, vector, dims=None):
        vector = np.asarray(vector, dtype=complex)
        return cls(np.outer(vector, vector.conj()), dims=dims)

    @property
    def matrix(self):
        return self._matrix

    @property
    def dimension(self):
        return self._matrix.shape[0]

    def trace(self):
        return complex(np.trace(self._matrix))

    def eigenvalues(self):
        return eigh(self._matrix, eigvals_only=True)

    def check(self):
        """Raises CheckFailedError unless the matrix is a density matrix."""
        if np.abs(self._matrix - self._matrix.conj().T).max() > HERMITIAN_TOL:
            raise CheckFailedError("matrix is not Hermitian")
        if abs(self.trace() - 1) > TRACE_TOL:
            raise CheckFailedError("trace is %s, expected 1" % self.trace())
        if self.eigenvalues().min() < -PSD_TOL:
            raise CheckFailedError("matrix is not positive semidefinite")
        return True

    def expectation(self, vector):
        """<v| rho |v> (real part)."""
        vector = np.asarray(vector, dtype=complex)
        return float(np.real(vector.conj() @ self._matrix @ vector))

    def conjugate(self, unitary, check=True):
        """U rho U^dagger."""
        return DensityOperator(unitary @ self._matrix @ unitary.conj().T, self.dims, check=check)

    def tensor(self, other):
        return DensityOperator(np.kron(self._matrix, other.matrix), self.dims + other.dims)

    def tensor_power(self, copies):
        check_guard(self.dimension**copies, DENSE_GUARD, what="dense dimension")
        result = self
        for _ in range(copies - 1):
            result = result.tensor(self)
        return result


def graph_state(q, z, p):
    """|phi_{Q,z}> = p^(-1/2) sum_r |r> |Q(r) + z> on the registers (r, value).

    :param q: coefficients (q_1, ..., q_n)
    :param z: shift in F_p
    :param p: modulus
    :return: complex vector of length p^2, index r p + value
    """
    p = as_modulus(p).p
    check_guard(p * p, DENSE_GUARD, what="dense dimension")
    r = np.arange(p)
    values = np.zeros(p, dtype=np.int64)
    for coefficient in reversed(list(q)):
        values = (values + int(coefficient) % p) * r % p
    vector = np.zeros(p * p, dtype=complex)
    vector[r * p + (values + z) % p] = 1 / np.sqrt(p)
    return vector


def polynomial_function_state(q, p):
    """rho_Q = (1/p) sum_z |phi_{Q,z}><phi_{Q,z}|."""
    p = as_modulus(p).p
    vectors = np.array([graph_state(q, z, p) for z in range(p)])
    return DensityOperator(vectors.T @ vectors.conj() / p, dims=[p, p])


def build_states(q, z, p):
    """Graph state for an integer z, the mixture rho_Q for z = 'mixed'."""
    if z == "mixed":
        return polynomial_function_state(q, p)
    return graph_state(q, int(z), p)


def fourier_matrix(p):
    """F_p = p^(-1/2) sum_{k,l} omega^(k l) |k><l| with omega = exp(2 pi i / p)."""
    k = np.arange(p)
    return np.exp(2j * np.pi * np.outer(k, k) / p) / np.sqrt(p)


def shift_matrix(p):
    """S_p |x> = |x + 1 mod p>."""
    return np.roll(np.eye(p), 1, axis=0)


def shift_identity_residual(p):
    """max_k || F S^k F^dagger - diag(omega^(u k)) ||_max."""
    fourier = fourier_matrix(p)
    shift = shift_matrix(p)
    u = np.arange(p)
    residual = 0.0
    power = np.eye(p)
    for k in range(p):
        diagonal = np.diag(np.exp(2j * np.pi * u * k / p))
        residual = max(residual, np.abs(fourier @ power @ fourier.conj().T - diagonal).max())
        power = shift @ power
    return float(residual)


def fourier_conjugate(rho, p, copies=1):
    """Applies I_p (x) F_p to each (r, value) pair of registers.

    :param rho: DensityOperator on copies pairs of registers of dimension p
    :param p: modulus
    :param copies: number of (r, value) pairs
    :return: DensityOperator
    """
    p = as_modulus(p).p
    residual = shift_identity_residual(p)
    if residual > HERMITIAN_TOL * p:
        raise CheckFailedError("Fourier transform does not diagonalize the shift: %s" % residual)
    single = np.kron(np.eye(p), fourier_matrix(p))
    unitary = single
    for _ in range(copies - 1):
        unitary = np.kron(unitary, single)
    return rho.conjugate(unitary)


def group_registers(rho, p, copies):
    """Reorders the registers (r_1, x_1, ..., r_k, x_k) into (r_1, ..., r_k, x_1, ..., x_k).

    :return: DensityOperator
    """
    order = [2 * i for i in range(copies)] + [2 * i + 1 for i in range(copies)]
    tensor = rho.matrix.reshape((p,) * (4 * copies))
    tensor = tensor.transpose(order + [2 * copies + axis for axis in order])
    dimension = p ** (2 * copies)
    return DensityOperator(tensor.reshape(dimension, dimension), [p] * (2 * copies), check=False)
