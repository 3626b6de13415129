"""Univariate polynomials over F_p and their roots."""

import logging
import warnings
import numpy as np
from hpfg.FiniteField.ff_core import FieldElement, as_modulus
from hpfg.Util.param_util import (
    EXHAUSTIVE_ROOT_LIMIT,
    BRUTE_FORCE_GUARD,
    ModulusMismatchError,
    check_guard,
    make_rng,
)

logger = logging.getLogger(__name__)

# degree of the zero polynomial
MINUS_INFINITY = float("-inf")

_ROOT_STRATEGIES = ["exhaustive", "split"]
_SCAN_CHUNK = 2**20


def _trim(coefficients):
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return coefficients


class UniPoly(object):
    """Polynomial sum_i a_i X^i over F_p.

    Coefficients are stored as canonical residues in ascending degree without trailing
    zeros; the zero polynomial has no coefficients.
    """

    __slots__ = ("_residues", "_modulus")

    def __init__(self, coefficients, modulus):
        """

        :param coefficients: ascending coefficients, ints or FieldElement
        :param modulus: PrimeModulus or int
        """
        modulus = as_modulus(modulus)
        residues = []
        for coefficient in coefficients:
            if isinstance(coefficient, FieldElement):
                if coefficient.modulus != modulus:
                    raise ModulusMismatchError(
                        "coefficient mod %d in polynomial mod %d"
                        % (coefficient.modulus.p, modulus.p)
                    )
                residues.append(coefficient.value)
            else:
                residues.append(int(coefficient) % modulus.p)
        self._residues = tuple(_trim(residues))
        self._modulus = modulus

    @classmethod
    def monomial(cls, degree, modulus, coefficient=1):
        """coefficient * X^degree."""
        return cls([0] * degree + [coefficient], modulus)

    @classmethod
    def from_roots(cls, roots, modulus, leading=1):
        """leading * prod_r (X - r)."""
        poly = cls([leading], modulus)
        for root in roots:
            poly = poly * cls([-int(root), 1], modulus)
        return poly

    @property
    def modulus(self):
        return self._modulus

    @property
    def p(self):
        return self._modulus.p

    @property
    def residues(self):
        """Ascending coefficients as canonical residues (tuple of int)."""
        return self._residues

    @property
    def coefficients(self):
        """Ascending coefficients as FieldElement."""
        return tuple(FieldElement(a, self._modulus) for a in self._residues)

    @property
    def degree(self):
        """Degree, MINUS_INFINITY for the zero polynomial."""
        if not self._residues:
            return MINUS_INFINITY
        return len(self._residues) - 1

    @property
    def leading_coefficient(self):
        if not self._residues:
            return 0
        return self._residues[-1]

    def is_zero(self):
        return len(self._residues) == 0

    def _check(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other], self._modulus)
        if other._modulus != self._modulus:
            raise ModulusMismatchError(
                "cannot combine polynomials mod %d and mod %d"
                % (self._modulus.p, other._modulus.p)
            )
        return other

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._modulus == other._modulus and self._residues == other._residues

    def __hash__(self):
        return hash((self._residues, self._modulus.p))

    def __repr__(self):
        return "UniPoly(%s, %d)" % (list(self._residues), self._modulus.p)

    def __call__(self, a):
        return evaluate(self, a)

    def __add__(self, other):
        other = self._check(other)
        p = self.p
        size = max(len(self._residues), len(other._residues))
        a = self._residues + (0,) * (size - len(self._residues))
        b = other._residues + (0,) * (size - len(other._residues))
        return UniPoly([(s + t) % p for s, t in zip(a, b)], self._modulus)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-a for a in self._residues], self._modulus)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return UniPoly([], self._modulus)
        p = self.p
        product = [0] * (len(self._residues) + len(other._residues) - 1)
        for i, a in enumerate(self._residues):
            if a == 0:
                continue
            for j, b in enumerate(other._residues):
                product[i + j] = (product[i + j] + a * b) % p
        return UniPoly(product, self._modulus)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def monic(self):
        """Divides by the leading coefficient; the zero polynomial stays zero."""
        if self.is_zero():
            return self
        scale = self._modulus.inv(self._residues[-1])
        return UniPoly([a * scale for a in self._residues], self._modulus)

    def powmod(self, exponent, divisor):
        """self^exponent modulo divisor by square-and-multiply.

        :param exponent: nonnegative int
        :param divisor: nonzero UniPoly
        :return: UniPoly of degree < deg(divisor)
        """
        divisor = self._check(divisor)
        result = UniPoly([1], self._modulus) % divisor
        base = self % divisor
        exponent = int(exponent)
        while exponent > 0:
            if exponent & 1:
                result = (result * base) % divisor
            base = (base * base) % divisor
            exponent >>= 1
        return result


def evaluate(f, a):
    """Horner evaluation.

    :param f: UniPoly
    :param a: FieldElement (or int, read as a residue)
    :return: FieldElement
    """
    if isinstance(a, FieldElement):
        if a.modulus != f.modulus:
            raise ModulusMismatchError(
                "point mod %d for polynomial mod %d" % (a.modulus.p, f.p)
            )
        a = a.value
    p = f.p
    a = int(a) % p
    value = 0
    for coefficient in reversed(f.residues):
        value = (value * a + coefficient) % p
    return FieldElement(value, f.modulus)


def poly_divmod(f, g):
    """Euclidean division f = q * g + r with deg r < deg g.

    :param f: UniPoly
    :param g: nonzero UniPoly
    :return: (q, r)
    """
    g = f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = f.p
    remainder = list(f.residues)
    divisor = g.residues
    shift = len(remainder) - len(divisor)
    if shift < 0:
        return UniPoly([], f.modulus), f
    lead_inverse = f.modulus.inv(divisor[-1])
    quotient = [0] * (shift + 1)
    for position in range(shift, -1, -1):
        factor = remainder[position + len(divisor) - 1] * lead_inverse % p
        quotient[position] = factor
        if factor == 0:
            continue
        for i, b in enumerate(divisor):
            remainder[position + i] = (remainder[position + i] - factor * b) % p
    return UniPoly(quotient, f.modulus), UniPoly(remainder[: len(divisor) - 1], f.modulus)


def gcd(f, g):
    """Monic greatest common divisor; gcd(f, 0) = monic(f) and gcd(0, 0) = 0."""
    g = f._check(g)
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def _roots_exhaustive(f):
    p = f.p
    check_guard(p, BRUTE_FORCE_GUARD, what="exhaustive root scan over F_p")
    coefficients = np.array(f.residues[::-1], dtype=np.int64)
    found = []
    for start in range(0, p, _SCAN_CHUNK):
        points = np.arange(start, min(start + _SCAN_CHUNK, p), dtype=np.int64)
        values = np.zeros_like(points)
        for coefficient in coefficients:
            values = (values * points + coefficient) % p
        found.extend(int(r) for r in points[values == 0])
    return found


def _split_linear(g, rng):
    """Roots of a monic squarefree product of distinct linear factors."""
    modulus = g.modulus
    p = modulus.p
    if g.degree == 1:
        return [(-g.residues[0]) % p]
    if g.degree <= 0:
        return []
    half = (p - 1) // 2
    while True:
        shift = int(rng.integers(0, p))
        splitter = UniPoly([shift, 1], modulus).powmod(half, g) - 1
        factor = gcd(g, splitter)
        if 0 < factor.degree < g.degree:
            return _split_linear(factor, rng) + _split_linear(g // factor, rng)


def _roots_split(f, rng):
    x = UniPoly.monomial(1, f.modulus)
    frobenius = x.powmod(f.p, f) - x
    linear_part = gcd(f, frobenius)
    return _split_linear(linear_part, rng)


def roots(f, strategy=None, rng=None):
    """Distinct roots of f in F_p.

    :param f: nonzero UniPoly
    :param strategy: 'exhaustive' (scan every element) or 'split' (gcd with X^p - X, then
     randomized equal-degree splitting); None picks exhaustive for p < 2^16
    :param rng: numpy Generator or seed for the split strategy; seed 0 with a warning
     when None
    :return: sorted list of FieldElement
    """
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes on all of F_p")
    if strategy is None:
        strategy = "exhaustive" if f.p < EXHAUSTIVE_ROOT_LIMIT else "split"
    if strategy not in _ROOT_STRATEGIES:
        raise ValueError(
            "root strategy %s not supported. Chose among %s." % (strategy, _ROOT_STRATEGIES)
        )
    if f.degree == 0:
        return []
    if strategy == "exhaustive":
        found = _roots_exhaustive(f)
    else:
        if rng is None:
            warnings.warn(
                "root splitting without a random stream; using a fixed seed", stacklevel=2
            )
            rng = 0
        found = _roots_split(f, make_rng(rng))
    logger.debug("%d roots of a degree %d polynomial mod %d (%s)", len(set(found)), f.degree,
                 f.p, strategy)
    return [FieldElement(r, f.modulus) for r in sorted(set(found))]


def root_residues(residues, modulus, rng=None):
    """Roots of the polynomial with the given ascending residues as sorted ints; the
    zero polynomial is rejected like in roots().

    Used by the solvers, which work on canonical residues.
    """
    f = UniPoly(residues, modulus)
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes on all of F_p")
    if f.degree == 0:
        return []
    if f.p < EXHAUSTIVE_ROOT_LIMIT:
        return sorted(set(_roots_exhaustive(f)))
    if rng is None:
        warnings.warn(
            "root splitting without a random stream; using a fixed seed", stacklevel=2
        )
        rng = 0
    return sorted(set(_roots_split(f, make_rng(rng))))
