"""Fidelity of polynomial function states.

The states rho_Q = (1/p) sum_z |phi_{Q,z}><phi_{Q,z}| are uniform mixtures of p
orthonormal graph states, so sqrt(rho_Q) sqrt(rho_Qt) = (1/p) sum |phi_{Q,z}> G
<phi_{Qt,zt}| with the Gram matrix of overlaps
G[z, zt] = #{r : Q(r) + z = Qt(r) + zt} / p, and F = ||G||_1 / p.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.linalg import eigh, svdvals

from hpfg.FiniteField.ff_core import as_modulus
from hpfg.Util.param_util import GRAM_GUARD, ConfigError, all_tuples, check_guard


@dataclass
class FidelityReport:
    q: Tuple[int, ...]
    q_tilde: Tuple[int, ...]
    p: int
    n: int
    gram: np.ndarray
    fidelity: float
    alpha: float
    bound: float
    max_intersections: int

    @property
    def support_bound(self):
        """alpha * sqrt(p); the square-root spectrum of rho_Q sums to sqrt(p)."""
        return self.alpha * np.sqrt(self.p)

    def checks(self):
        return {
            "fidelity_le_bound": self.fidelity <= self.bound + 1e-12,
            "fidelity_le_support_bound": self.fidelity <= self.support_bound + 1e-12,
            "intersections_le_degree": self.max_intersections <= self.n,
        }


def polynomial_values(q, p):
    """Q(r) for every r in F_p, Q(X) = q_1 X + ... + q_n X^n.

    :param q: coefficients (q_1, ..., q_n)
    :return: int64 array of length p
    """
    r = np.arange(p, dtype=np.int64)
    values = np.zeros(p, dtype=np.int64)
    for coefficient in reversed(list(q)):
        values = (values + int(coefficient) % p) * r % p
    return values


def intersection_counts(q, q_tilde, p):
    """cnt[t] = #{r : Q(r) - Qt(r) = t}; cnt[zt - z] points lie on both shifted graphs."""
    difference = (polynomial_values(q, p) - polynomial_values(q_tilde, p)) % p
    return np.bincount(difference, minlength=p)


def gram_matrix(q, q_tilde, p):
    """p x p matrix of overlaps <phi_{Q,z}|phi_{Qt,zt}>."""
    counts = intersection_counts(q, q_tilde, p)
    z = np.arange(p)
    return counts[(z[None, :] - z[:, None]) % p] / float(p)


def fidelity_exact(q, q_tilde, p):
    """Fidelity of rho_Q and rho_Qt through the singular values of the Gram matrix.

    :param q: coefficients (q_1, ..., q_n) of Q, zero constant term
    :param q_tilde: coefficients of Qt
    :param p: modulus, at most GRAM_GUARD
    :return: FidelityReport
    """
    p = as_modulus(p).p
    check_guard(p, GRAM_GUARD, what="Gram matrix dimension p")
    n = max(len(q), len(q_tilde))
    q = tuple(int(value) % p for value in q) + (0,) * (n - len(q))
    q_tilde = tuple(int(value) % p for value in q_tilde) + (0,) * (n - len(q_tilde))
    if q == q_tilde:
        raise ConfigError("fidelity of a state with itself is 1, pass distinct polynomials")
    gram = gram_matrix(q, q_tilde, p)
    fidelity = float(svdvals(gram).sum()) / p
    return FidelityReport(
        q=q,
        q_tilde=q_tilde,
        p=p,
        n=n,
        gram=gram,
        fidelity=fidelity,
        alpha=float(np.abs(gram).max()),
        bound=n / np.sqrt(p),
        max_intersections=int(intersection_counts(q, q_tilde, p).max()),
    )


def all_polynomials(p, n):
    """Coefficient tuples (q_1, ..., q_n) of all polynomials of degree <= n without
    constant term, lexicographic."""
    return [tuple(int(v) for v in row) for row in all_tuples(p, n)]


def max_fidelity(p, n):
    """Largest fidelity over ordered pairs of distinct polynomials of degree <= n.

    Only the difference Q - Qt matters, so the pairs reduce to the nonzero differences.

    :return: (fidelity, difference coefficients attaining it)
    """
    zero = (0,) * n
    best, argmax = 0.0, None
    for difference in all_polynomials(p, n):
        if difference == zero:
            continue
        fidelity = fidelity_exact(difference, zero, p).fidelity
        if fidelity > best:
            best, argmax = fidelity, difference
    return best, argmax


def _sqrt_psd(rho):
    values, vectors = eigh(rho)
    values = np.clip(values, 0, None)
    return (vectors * np.sqrt(values)) @ vectors.conj().T, values, vectors


def support_fidelity_bound(rho, sigma, tol=1e-12):
    """Both sides of F(rho, sigma) <= alpha min(sum_i sqrt(lambda_i), sum_j sqrt(mu_j))
    where alpha is the largest overlap of eigenvectors in the supports.

    :param rho: density matrix
    :param sigma: density matrix of the same dimension
    :return: (fidelity, bound)
    """
    sqrt_rho, lam, psi = _sqrt_psd(np.asarray(rho))
    sqrt_sigma, mu, phi = _sqrt_psd(np.asarray(sigma))
    fidelity = float(svdvals(sqrt_rho @ sqrt_sigma).sum())
    support_rho = lam > tol
    support_sigma = mu > tol
    overlaps = np.abs(psi[:, support_rho].conj().T @ phi[:, support_sigma])
    alpha = float(overlaps.max())
    bound = alpha * min(np.sqrt(lam[support_rho]).sum(), np.sqrt(mu[support_sigma]).sum())
    return fidelity, float(bound)


def random_density_matrix(dim, rng, rank=None):
    """Density matrix with a known spectral decomposition: random Dirichlet spectrum on a
    Haar-like unitary from the QR decomposition of a complex Gaussian matrix.

    :param dim: dimension
    :param rng: numpy Generator
    :param rank: number of nonzero eigenvalues, defaults to dim
    :return: (rho, eigenvalues, eigenvectors as columns)
    """
    rank = dim if rank is None else rank
    gaussian = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    unitary, upper = np.linalg.qr(gaussian)
    unitary = unitary * (np.diag(upper) / np.abs(np.diag(upper)))
    spectrum = np.zeros(dim)
    spectrum[:rank] = rng.dirichlet(np.ones(rank))
    rho = (unitary * spectrum) @ unitary.conj().T
    return rho, spectrum, unitary


def support_bound_check(trials, rng, max_dim=4, tol=1e-10):
    """Evaluates the support fidelity bound on random pairs of density matrices of dimension
    2..max_dim, with random ranks.

    :param trials: number of pairs
    :param rng: numpy Generator
    :return: (violations, largest fidelity minus bound)
    """
    violations, worst = 0, -np.inf
    for _ in range(int(trials)):
        dim = int(rng.integers(2, max_dim + 1))
        rho = random_density_matrix(dim, rng, rank=int(rng.integers(1, dim + 1)))[0]
        sigma = random_density_matrix(dim, rng, rank=int(rng.integers(1, dim + 1)))[0]
        fidelity, bound = support_fidelity_bound(rho, sigma)
        worst = max(worst, fidelity - bound)
        if fidelity > bound + tol:
            violations += 1
    return violations, float(worst)
