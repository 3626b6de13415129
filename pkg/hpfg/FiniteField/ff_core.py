"""Exact arithmetic in the prime field F_p."""

from functools import total_ordering
from sympy import isprime
from hpfg.Util.param_util import MAX_PRIME, ConfigError, ModulusMismatchError


class PrimeModulus(object):
    """An odd prime p defining the field F_p.

    Besides constructing FieldElement instances, the modulus offers the same
    arithmetic on canonical residues (plain ints in [0, p-1]); the solvers and
    enumerations work on residues to avoid object overhead in their inner loops.
    """

    __slots__ = ("_p",)

    def __init__(self, p):
        """

        :param p: odd prime, 3 <= p < 2^31
        :type p: int
        """
        try:
            p = int(p)
        except (TypeError, ValueError):
            raise ConfigError("modulus must be an integer, got %r" % (p,))
        if p < 3 or p % 2 == 0:
            raise ConfigError("modulus must be an odd prime >= 3, got %s" % p)
        if p >= MAX_PRIME:
            raise ConfigError("modulus %s exceeds the supported range 2^31" % p)
        if not isprime(p):
            raise ConfigError("modulus %s is not prime" % p)
        self._p = p

    @property
    def p(self):
        """The prime as int."""
        return self._p

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and other._p == self._p

    def __hash__(self):
        return hash(("PrimeModulus", self._p))

    def __repr__(self):
        return "PrimeModulus(%d)" % self._p

    def __int__(self):
        return self._p

    def element(self, value):
        """Field element with the canonical residue of value.

        :param value: int or FieldElement of this modulus
        :return: FieldElement
        """
        if isinstance(value, FieldElement):
            if value.modulus != self:
                raise ModulusMismatchError(
                    "element mod %d used with modulus %d" % (value.modulus.p, self._p)
                )
            return value
        return FieldElement(value, self)

    def reduce(self, value):
        return int(value) % self._p

    def inv(self, value):
        """Inverse of a residue.

        :param value: int, nonzero modulo p
        :return: canonical residue of value^(-1)
        """
        value = int(value) % self._p
        if value == 0:
            raise ZeroDivisionError("0 has no inverse modulo %d" % self._p)
        return pow(value, self._p - 2, self._p)

    def power(self, value, exponent):
        """value^exponent by square-and-multiply; negative exponents invert first."""
        value = int(value) % self._p
        exponent = int(exponent)
        if exponent < 0:
            value = self.inv(value)
            exponent = -exponent
        return pow(value, exponent, self._p)

    def legendre(self, value):
        """Legendre symbol of a residue, in {-1, 0, 1}."""
        value = int(value) % self._p
        if value == 0:
            return 0
        symbol = pow(value, (self._p - 1) // 2, self._p)
        return 1 if symbol == 1 else -1

    def sqrt(self, value):
        """All square roots of a residue.

        :param value: int
        :return: sorted list with 0, 1 or 2 canonical residues
        """
        p = self._p
        value = int(value) % p
        if value == 0:
            return [0]
        if self.legendre(value) != 1:
            return []
        if p % 4 == 3:
            root = pow(value, (p + 1) // 4, p)
        else:
            root = self._tonelli_shanks(value)
        return sorted({root, p - root})

    def _tonelli_shanks(self, value):
        p = self._p
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        # first non-residue; the scan is deterministic given p
        z = 2
        while self.legendre(z) != -1:
            z += 1
        m = s
        c = pow(z, q, p)
        t = pow(value, q, p)
        root = pow(value, (q + 1) // 2, p)
        while t != 1:
            i, t_square = 0, t
            while t_square != 1:
                t_square = t_square * t_square % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m = i
            c = b * b % p
            t = t * c % p
            root = root * b % p
        return root

    def quadratic_roots(self, a, b, c):
        """Roots of a*X^2 + b*X + c with a nonzero leading coefficient.

        :return: sorted list of canonical residues
        """
        p = self._p
        a, b, c = int(a) % p, int(b) % p, int(c) % p
        if a == 0:
            raise ValueError("leading coefficient must be nonzero")
        discriminant = (b * b - 4 * a * c) % p
        half_inverse = self.inv(2 * a)
        return sorted({(-b + r) * half_inverse % p for r in self.sqrt(discriminant)})


def as_modulus(p):
    """Accepts a PrimeModulus or an int.

    :return: PrimeModulus
    """
    if isinstance(p, PrimeModulus):
        return p
    return PrimeModulus(p)


@total_ordering
class FieldElement(object):
    """Immutable element of F_p stored as its canonical residue."""

    __slots__ = ("_value", "_modulus")

    def __init__(self, value, modulus):
        """

        :param value: integer representative
        :param modulus: PrimeModulus or int
        """
        modulus = as_modulus(modulus)
        self._modulus = modulus
        self._value = int(value) % modulus.p

    @property
    def value(self):
        """Canonical residue in [0, p-1]."""
        return self._value

    @property
    def modulus(self):
        return self._modulus

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other._modulus != self._modulus:
                raise ModulusMismatchError(
                    "cannot combine elements mod %d and mod %d"
                    % (self._modulus.p, other._modulus.p)
                )
            return other._value
        if isinstance(other, int):
            return other % self._modulus.p
        return NotImplemented

    def _new(self, value):
        return FieldElement(value, self._modulus)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self._value + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self._value - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(other - self._value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self._value * other)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self._value)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self._value * self._modulus.inv(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(other * self._modulus.inv(self._value))

    def __pow__(self, exponent):
        return power(self, exponent)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self._modulus == other._modulus and self._value == other._value
        if isinstance(other, int):
            return self._value == other % self._modulus.p
        return NotImplemented

    def __lt__(self, other):
        return self._value < self._coerce(other)

    def __hash__(self):
        return hash((self._value, self._modulus.p))

    def __int__(self):
        return self._value

    def __index__(self):
        return self._value

    def __bool__(self):
        return self._value != 0

    def __repr__(self):
        return "FieldElement(%d, %d)" % (self._value, self._modulus.p)


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def inverse(a):
    """Multiplicative inverse.

    :param a: FieldElement
    :return: FieldElement with a * inverse(a) = 1
    :raises ZeroDivisionError: for a = 0
    """
    return FieldElement(a.modulus.inv(a.value), a.modulus)


def power(a, exponent):
    """a^exponent for any integer exponent; negative exponents use the inverse.

    :param a: FieldElement
    :param exponent: int
    :return: FieldElement
    """
    return FieldElement(a.modulus.power(a.value, exponent), a.modulus)


def legendre(a):
    """Legendre symbol a^((p-1)/2) with -1 canonicalized.

    :param a: FieldElement
    :return: -1, 0 or 1
    """
    return a.modulus.legendre(a.value)


def sqrt_mod_p(a):
    """Square roots of a field element, Tonelli-Shanks for p = 1 mod 4 and the direct
    exponent a^((p+1)/4) for p = 3 mod 4.

    :param a: FieldElement
    :return: list of 0, 1 or 2 FieldElement sorted by canonical residue
    """
    return [FieldElement(root, a.modulus) for root in a.modulus.sqrt(a.value)]
