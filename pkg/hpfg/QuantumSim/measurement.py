"""Measurement pipeline of the square case k = n: measure the Fourier register x,
relabel with U_x and measure in the basis |psi_qhat>."""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from hpfg.Analysis.eta_histogram import SolutionTable, eta_histogram_forward
from hpfg.Analysis.success_analysis import per_x_success
from hpfg.FiniteField.ff_core import as_modulus
from hpfg.QuantumSim.density_operator import (
    DensityOperator,
    fourier_conjugate,
    group_registers,
    polynomial_function_state,
)
from hpfg.QuantumSim.relabeling import build_ux, solver_table
from hpfg.Util.param_util import (
    DENSE_GUARD,
    ShapeError,
    all_tuples,
    check_guard,
    tuple_to_index,
)

logger = logging.getLogger(__name__)


def _check_square(q, x):
    if len(q) != len(x):
        raise ShapeError(
            "the measurement needs k = n copies, got n=%d, k=%d" % (len(q), len(x))
        )


def fourier_state_copies(q, p, copies=None):
    """(I (x) F) rho_Q (I (x) F^dagger) on copies pairs of registers, regrouped to
    (r_1, ..., r_k, x_1, ..., x_k).

    :param q: hidden coefficients (q_1, ..., q_n)
    :param p: modulus
    :param copies: number of copies, defaults to n
    :return: DensityOperator of dimension p^(2 copies)
    """
    p = as_modulus(p).p
    copies = len(q) if copies is None else copies
    check_guard(p ** (2 * copies), DENSE_GUARD, what="dense dimension")
    single = fourier_conjugate(polynomial_function_state(q, p), p)
    return group_registers(single.tensor_power(copies), p, copies)


def off_block_residual(rho_copies, p, copies):
    """Largest entry coupling different Fourier labels x != x'."""
    size = p**copies
    tensor = rho_copies.matrix.reshape(size, size, size, size)
    x = np.arange(size)
    mask = x[:, None] != x[None, :]
    return float(np.abs(tensor.transpose(0, 2, 1, 3)[:, :, mask]).max())


def measure_x_block(rho_copies, x, p, n=None):
    """Probability of the Fourier outcome x and the reduced state of the r registers.

    :param rho_copies: DensityOperator from fourier_state_copies
    :param x: k-tuple
    :param p: modulus as int
    :param n: number of copies in rho_copies, defaults to k
    :return: (probability, DensityOperator)
    :raises ShapeError: if x does not have one entry per copy or the state has the wrong size
    """
    k = len(x)
    n = k if n is None else n
    if k != n:
        raise ShapeError("x needs one entry per copy, got k=%d for n=%d copies" % (k, n))
    size = p**k
    if rho_copies.matrix.shape != (size * size, size * size):
        raise ShapeError(
            "expected a state of dimension p^(2n) = %d, got %s"
            % (size * size, rho_copies.matrix.shape)
        )
    label = tuple_to_index([int(value) % p for value in x], p)
    tensor = rho_copies.matrix.reshape(size, size, size, size)
    block = tensor[:, label, :, label]
    probability = float(np.real(np.trace(block)))
    return probability, DensityOperator(block / probability, dims=[p] * k)


def reduced_state_from_solver(q, x, p, solver=None, table=None):
    """(1/p^k) |Psi><Psi| with Psi = sum_w omega^<q|w> sum_{b in S_w} |b>, from the
    solution sets the solver returns for x.

    :param solver: defaults to relabeling.default_solver(p)
    :param table: precomputed solution table of x, replaces the solver calls
    :return: DensityOperator
    """
    _check_square(q, x)
    p = as_modulus(p).p
    n = len(q)
    check_guard(p**n, DENSE_GUARD, what="dense dimension")
    if table is None:
        table = solver_table(x, n, p, solver)
    psi = np.zeros(p**n, dtype=complex)
    for label, w in enumerate(all_tuples(p, n)):
        phase = np.exp(2j * np.pi * (int(np.dot(q, w)) % p) / p)
        psi[table.label_indices(label)] = phase
    return DensityOperator(np.outer(psi, psi.conj()) / p ** len(x), dims=[p] * len(x))


def fourier_basis(p, n):
    """Columns |psi_qhat> = p^(-n/2) sum_w omega^<qhat|w> |w>, qhat in lexicographic order."""
    labels = all_tuples(p, n)
    return np.exp(2j * np.pi * (labels @ labels.T % p) / p) / np.sqrt(p**n)


def relabeled_state(q, x, p, completion="canonical", solver=None):
    """U_x rho_x U_x^dagger from the dense pipeline; also returns the x probability."""
    _check_square(q, x)
    p = as_modulus(p).p
    rho_copies = fourier_state_copies(q, p)
    probability, reduced = measure_x_block(rho_copies, x, p, n=len(q))
    return probability, reduced.conjugate(build_ux(x, p, completion=completion, solver=solver))


def detection_probability_dense(q, x, p, completion="canonical", solver=None):
    """<psi_Q| U_x rho_x U_x^dagger |psi_Q> from dense matrices.

    :param q: hidden coefficients (q_1, ..., q_n)
    :param x: k-tuple with k = n
    :param p: modulus
    :param solver: solver producing the sets S_w for U_x
    :return: float
    """
    p = as_modulus(p).p
    _, state = relabeled_state(q, x, p, completion=completion, solver=solver)
    psi_q = fourier_basis(p, len(q))[:, tuple_to_index([v % p for v in q], p)]
    return state.expectation(psi_q)


def dense_outcome_distribution(q, x, p, solver=None):
    """Probability of every qhat (lexicographic order) from the dense pipeline."""
    p = as_modulus(p).p
    _, state = relabeled_state(q, x, p, solver=solver)
    basis = fourier_basis(p, len(q))
    return np.real(np.einsum("iq,ij,jq->q", basis.conj(), state.matrix, basis))


def outcome_distribution(q, x, p, eta=None, solver=None):
    """Pr(qhat) = |sum_w sqrt(eta_w) omega^<q - qhat|w>|^2 / p^(k+n) for every qhat.

    :param q: hidden coefficients (q_1, ..., q_n)
    :param x: k-tuple
    :param p: modulus
    :param eta: eta_w^x indexed by label, taken from the solver when None
    :param solver: defaults to relabeling.default_solver(p)
    :return: float array of length p^n, qhat in lexicographic order
    """
    p = as_modulus(p).p
    n, k = len(q), len(x)
    if eta is None:
        eta = solver_table(x, n, p, solver).eta
    amplitudes = np.fft.fftn(np.sqrt(eta).reshape((p,) * n))
    weights = np.abs(amplitudes) ** 2 / float(p ** (k + n))
    differences = (np.asarray(q, dtype=np.int64) - all_tuples(p, n)) % p
    return weights[tuple(differences.T)]


@dataclass
class SimulationReport:
    """Largest deviations between the dense pipeline and the combinatorial formulas,
    over every x in F_p^k."""

    p: int
    n: int
    k: int
    q: Tuple[int, ...]
    outcomes: int
    off_block_residual: float
    trace_error: float
    reduced_state_error: float
    detection_error: float
    distribution_error: float
    completion_error: float
    solver_mismatches: int = 0

    def checks(self):
        return {
            "block_diagonal": self.off_block_residual < 1e-12,
            "x_probability": self.trace_error < 1e-12,
            "reduced_state": self.reduced_state_error < 1e-10,
            "detection_probability": self.detection_error < 1e-10,
            "outcome_distribution": self.distribution_error < 1e-10,
            "completion_independent": self.completion_error < 1e-10,
            "solver_matches_enumeration": self.solver_mismatches == 0,
        }


def validate_dense_pipeline(q, p, solver=None):
    """Runs the dense pipeline for every x, with U_x and the expected reduced state built
    from the solver, and compares it with the forward enumeration.

    :param q: hidden coefficients (q_1, ..., q_n); k = n copies are used
    :param p: modulus
    :param solver: defaults to relabeling.default_solver(p)
    :return: SimulationReport
    :raises CheckFailedError: if the solver's sets do not partition F_p^k for some x
    """
    p = as_modulus(p).p
    q = tuple(int(value) % p for value in q)
    n = k = len(q)
    rho_copies = fourier_state_copies(q, p)
    basis = fourier_basis(p, n)
    psi_q = basis[:, tuple_to_index(q, p)]
    report = SimulationReport(
        p=p,
        n=n,
        k=k,
        q=q,
        outcomes=p**k,
        off_block_residual=off_block_residual(rho_copies, p, k),
        trace_error=0.0,
        reduced_state_error=0.0,
        detection_error=0.0,
        distribution_error=0.0,
        completion_error=0.0,
    )
    for x in all_tuples(p, k):
        x = tuple(int(value) for value in x)
        table = solver_table(x, n, p, solver)
        forward = SolutionTable(x, n, p)
        same_sets = np.array_equal(table.eta, forward.eta) and np.array_equal(
            table.order, forward.order
        )
        report.solver_mismatches += int(not same_sets)
        probability, reduced = measure_x_block(rho_copies, x, p, n=n)
        expected_state = reduced_state_from_solver(q, x, p, table=table)
        state = reduced.conjugate(build_ux(x, p, table=table))
        reversed_state = reduced.conjugate(build_ux(x, p, completion="reversed", table=table))
        detection = state.expectation(psi_q)
        dense = np.real(np.einsum("iq,ij,jq->q", basis.conj(), state.matrix, basis))
        exact = per_x_success(eta_histogram_forward(x, n, p))
        report.trace_error = max(report.trace_error, abs(probability - 1.0 / p**k))
        report.reduced_state_error = max(
            report.reduced_state_error,
            float(np.abs(reduced.matrix - expected_state.matrix).max()),
        )
        report.detection_error = max(report.detection_error, abs(detection - exact))
        report.distribution_error = max(
            report.distribution_error,
            float(np.abs(dense - outcome_distribution(q, x, p, eta=table.eta)).max()),
        )
        report.completion_error = max(
            report.completion_error, abs(reversed_state.expectation(psi_q) - detection)
        )
    logger.info("dense pipeline p=%d n=%d: detection error %.3g", p, n, report.detection_error)
    if report.solver_mismatches:
        logger.warning(
            "solver and forward enumeration disagree for %d values of x", report.solver_mismatches
        )
    return report
