import logging

from hpfg.FiniteField.poly_fp import UniPoly, root_residues
from hpfg.GraphSystems.SolverTypes.solver_base import SolverBase
from hpfg.GraphSystems.cubic_coefficients import (
    CubicEliminationCoefficients,
    Regularity,
    bad_xy_condition,
    normalize_cubic,
)
from hpfg.Util.param_util import make_rng

logger = logging.getLogger(__name__)

# branch names recorded on the solution sets
FALLBACK = "fallback"
REGULAR = "regular"
VANISH1_LINEAR = "vanish1_linear"
VANISH1_QUARTIC = "vanish1_quartic"
VANISH2 = "vanish2"
BRANCHES = [FALLBACK, REGULAR, VANISH1_LINEAR, VANISH1_QUARTIC, VANISH2]


class CubicSolver(SolverBase):
    """Solver of the cubic system

        b + x c + y d = u,   b^2 + x c^2 + y d^2 = v,   b^3 + x c^3 + y d^3 = w

    (after division by x_1) through univariate polynomials in d of degree at most six.
    Instances with x_1 = 0 or a bad (x, y) pair go to an O(p) scan over d.
    """

    shape = (3, 3)

    def __init__(self, p, rng=None):
        """

        :param p: modulus
        :param rng: seed or numpy Generator for randomized root splitting at large p; a
         fixed seed is used (with a warning) when None
        """
        super(CubicSolver, self).__init__(p)
        self._rng = None if rng is None else make_rng(rng)

    def solve(self, instance):
        """

        :param instance: SystemInstance with n = k = 3
        :return: SolutionSet whose branch is one of BRANCHES
        """
        self._check_instance(instance)
        normalized = normalize_cubic(instance.x, instance.w, self._modulus)
        if normalized is None:
            return self.solve_fallback(instance)
        (_, x, y), (u, v, w) = normalized
        if bad_xy_condition(x, y, self.p) is not None:
            return self.solve_fallback(instance)
        coefficients = CubicEliminationCoefficients(x, y, u, v, w, self._modulus)
        kind = coefficients.dispatch()
        if kind == Regularity.REGULAR:
            candidates, branch = self._regular(coefficients)
        elif kind == Regularity.VANISH1:
            candidates, branch = self._vanish1(coefficients)
        elif kind == Regularity.VANISH2:
            candidates, branch = self._vanish2(coefficients)
        else:
            candidates = None
        if candidates is None:
            logger.debug("degenerate elimination at %s, scanning d", instance)
            return self.solve_fallback(instance)
        return self._verified(instance, candidates, branch)

    def _roots(self, ascending):
        """Roots of a polynomial in d, None for the zero polynomial."""
        if UniPoly(ascending, self._modulus).is_zero():
            return None
        return root_residues(ascending, self._modulus, rng=self._rng)

    def _back_substitute(self, coefficients, c, d):
        p = self.p
        b = (coefficients.u - coefficients.x * c - coefficients.y * d) % p
        return b, c % p, d % p

    def _c_from_quadratic(self, coefficients, d):
        """Solutions c of c^2 + c1 c d + c2 c + c3 d^2 + c4 d + c5 = 0 for fixed d."""
        c1, c2, c3, c4, c5 = coefficients.family("c")
        return self._modulus.quadratic_roots(1, c1 * d + c2, c3 * d * d + c4 * d + c5)

    def _regular(self, coefficients):
        p = self.p
        h = coefficients.family("h")
        g = coefficients.family("g")
        d_values = self._roots(list(reversed(h)) + [1])
        candidates = []
        for d in d_values:
            tail = 0
            for g_j in g:
                tail = (tail * d + g_j) % p
            candidates.append(self._back_substitute(coefficients, -tail, d))
        return candidates, REGULAR

    def _vanish1(self, coefficients):
        p = self.p
        e1, e2, e3, e4, e5, e6 = coefficients.family("e")
        ftilde = coefficients.family("ftilde")
        quartic = UniPoly(list(reversed(ftilde[1:])), self._modulus)
        if quartic.is_zero():
            return None, VANISH1_QUARTIC
        if ftilde[0] == 0:
            d_values = self._roots(quartic.residues)
            candidates = [
                self._back_substitute(coefficients, c, d)
                for d in d_values
                for c in self._c_from_quadratic(coefficients, d)
            ]
            return candidates, VANISH1_QUARTIC
        # c = -quartic(d) / ftilde1 inserted into c (d^2 + e1 d + e2) + e3 d^3 + ... + e6
        sextic = quartic * UniPoly([e2, e1, 1], self._modulus) - ftilde[0] * UniPoly(
            [e6, e5, e4, e3], self._modulus
        )
        d_values = self._roots(sextic.residues)
        if d_values is None:
            return None, VANISH1_LINEAR
        scale = self._modulus.inv(-ftilde[0])
        candidates = [
            self._back_substitute(coefficients, quartic(d).value * scale % p, d)
            for d in d_values
        ]
        return candidates, VANISH1_LINEAR

    def _vanish2(self, coefficients):
        gtilde = coefficients.family("gtilde")
        d_values = self._roots(list(reversed(gtilde)))
        if d_values is None:
            return None, VANISH2
        candidates = [
            self._back_substitute(coefficients, c, d)
            for d in d_values
            for c in self._c_from_quadratic(coefficients, d)
        ]
        return candidates, VANISH2

    def solve_fallback(self, instance):
        """Per-d scan valid for every instance.

        With a pivot j0 (first index with x_j0 != 0) and the scanned coordinate j2 = d,
        the linear equation gives b_j0 = (R - x_j1 c) / x_j0 with R = w_1 - x_j2 d, and
        the quadratic equation becomes
        (x_j1^2 + x_j0 x_j1) c^2 - 2 R x_j1 c + R^2 + x_j0 (x_j2 d^2 - w_2) = 0.

        :param instance: SystemInstance with n = k = 3
        :return: SolutionSet
        """
        self._check_instance(instance)
        p = self.p
        x = instance.x
        w1, w2, _ = instance.w
        nonzero = [j for j in range(3) if x[j] != 0]
        if not nonzero:
            if any(instance.w):
                candidates = []
            else:
                candidates = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
            return self._verified(instance, candidates, FALLBACK)
        pivot = nonzero[0]
        middle, scanned = [j for j in range(3) if j != pivot]
        x0, x1, x2 = x[pivot], x[middle], x[scanned]
        inv_x0 = self._modulus.inv(x0)
        a = (x1 * x1 + x0 * x1) % p
        candidates = []
        for d in range(p):
            rest = (w1 - x2 * d) % p
            b_coefficient = -2 * rest * x1 % p
            constant = (rest * rest + x0 * (x2 * d * d - w2)) % p
            if a != 0:
                c_values = self._modulus.quadratic_roots(a, b_coefficient, constant)
            elif b_coefficient != 0:
                c_values = [-constant * self._modulus.inv(b_coefficient) % p]
            elif constant == 0:
                c_values = range(p)
            else:
                c_values = []
            for c in c_values:
                solution = [0, 0, 0]
                solution[pivot] = (rest - x1 * c) * inv_x0 % p
                solution[middle] = c
                solution[scanned] = d
                candidates.append(tuple(solution))
        return self._verified(instance, candidates, FALLBACK)
