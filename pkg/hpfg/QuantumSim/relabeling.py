import numpy as np

from hpfg.Analysis.eta_histogram import SolverSolutionTable
from hpfg.GraphSystems.graph_system_solver import GraphSystemSolver
from hpfg.Util.param_util import DENSE_GUARD, CheckFailedError, ShapeError, check_guard

UNITARY_TOL = 1e-10
_COMPLETIONS = ["canonical", "reversed"]


def default_solver(p):
    """Closed-form solvers for n = k = 2, 3 and brute force otherwise, root splitting
    seeded with 0."""
    return GraphSystemSolver(p, rng=0)


def solver_table(x, n, p, solver=None):
    """Solution sets of x with one solver call per w.

    :param solver: object with solve(SystemInstance); defaults to default_solver(p)
    :return: SolverSolutionTable
    """
    if solver is None:
        solver = default_solver(p)
    return SolverSolutionTable(x, n, p, solver)


def solution_state_matrix(table):
    """Columns |S_w> = eta_w^(-1/2) sum_{b in S_w} |b> for every w with eta_w > 0.

    :param table: SolutionTable with k = n
    :return: (real matrix of shape (p^k, #nonempty), labels of the nonempty w)
    """
    size = table.p**table.k
    labels = np.flatnonzero(table.eta)
    states = np.zeros((size, len(labels)))
    for column, label in enumerate(labels):
        indices = table.label_indices(label)
        states[indices, column] = 1 / np.sqrt(table.eta[label])
    return states, labels


def _complete(states, order):
    """Orthonormal basis of the complement of the column span by Gram-Schmidt over the
    basis vectors |b> in the given order."""
    size, rank = states.shape
    basis = np.zeros((size, size))
    basis[:rank] = states.T
    count = rank
    for index in order:
        if count == size:
            break
        vector = np.zeros(size)
        vector[index] = 1.0
        for _ in range(2):
            vector = vector - basis[:count].T @ (basis[:count] @ vector)
        norm = np.linalg.norm(vector)
        if norm > 1e-8:
            basis[count] = vector / norm
            count += 1
    return basis[rank:count].T


def build_ux(x, p, n=None, completion="canonical", solver=None, table=None):
    """Real orthogonal U_x with U_x |S_w> = |w> for eta_w > 0; the complement of the
    solution states is mapped onto the |w> with eta_w = 0 in ascending order.

    :param x: k-tuple
    :param p: modulus as int
    :param n: degree, must equal k
    :param completion: 'canonical' or 'reversed' order of the Gram-Schmidt completion
    :param solver: solver producing the sets S_w; defaults to default_solver(p)
    :param table: precomputed solution table of x, replaces the solver calls
    :return: array of shape (p^k, p^k)
    """
    k = len(x)
    n = k if n is None else n
    if n != k:
        raise ShapeError("the relabeling needs k = n, got n=%d, k=%d" % (n, k))
    if completion not in _COMPLETIONS:
        raise ValueError(
            "completion %s not supported. Chose among %s." % (completion, _COMPLETIONS)
        )
    size = p**k
    check_guard(size, DENSE_GUARD, what="relabeling dimension")
    if table is None:
        table = solver_table(x, n, p, solver)
    states, labels = solution_state_matrix(table)
    order = range(size) if completion == "canonical" else range(size - 1, -1, -1)
    complement = _complete(states, order)
    empty = np.flatnonzero(table.eta == 0)
    unitary = np.zeros((size, size))
    unitary[labels, :] = states.T
    unitary[empty, :] = complement.T
    residual = np.abs(unitary @ unitary.T - np.eye(size)).max()
    if residual > UNITARY_TOL:
        raise CheckFailedError("relabeling is not unitary, residual %s" % residual)
    return unitary
