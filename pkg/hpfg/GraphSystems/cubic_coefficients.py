"""Elimination coefficients of the normalized cubic system.

With kappa = (1, x, y) and lambda = (u, v, w) the system

    b + x c + y d = u,   b^2 + x c^2 + y d^2 = v,   b^3 + x c^3 + y d^3 = w

is reduced by the substitution b = u - x c - y d to the quadratic relation

    c^2 + c1 c d + c2 c + c3 d^2 + c4 d + c5 = 0                          (a)

and a cubic relation with coefficients d1..d9. Successive reductions give

    c d^2 + e1 c d + e2 c + e3 d^3 + e4 d^2 + e5 d + e6 = 0
    c d + f1 c + f2 d^4 + ... + f6 = 0
    c + g1 d^5 + ... + g6 = 0
    d^6 + h1 d^5 + ... + h6 = 0

Each family divides by a denominator that may vanish; a family is only populated when
its denominator and those of the families it is built from are nonzero. The products
ftilde_j = E f_j and gtilde_j = G g_j (E, G the denominators of the f and g families)
are evaluated as numerators, so they stay defined when E or G vanish.
"""

from enum import Enum
from hpfg.FiniteField.ff_core import FieldElement, as_modulus

_FAMILY_SIZES = {
    "c": 5,
    "d": 9,
    "e": 6,
    "f": 6,
    "g": 6,
    "h": 6,
    "r": 4,
    "ftilde": 6,
    "gtilde": 6,
}


class Regularity(Enum):
    BAD_XY = "BadXY"
    REGULAR = "Regular"
    VANISH1 = "NonRegularVanish1"
    VANISH2 = "NonRegularVanish2"


class RegularityLabel(object):
    """Regularity class of a normalized tuple (x, y, u, v, w)."""

    def __init__(self, kind, failed_condition=None):
        """

        :param kind: Regularity member
        :param failed_condition: for BAD_XY, the first violated disequality, e.g. 'y=-x'
        """
        self.kind = kind
        self.failed_condition = failed_condition

    def __eq__(self, other):
        if isinstance(other, Regularity):
            return self.kind == other
        if isinstance(other, RegularityLabel):
            return self.kind == other.kind and self.failed_condition == other.failed_condition
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.failed_condition))

    def __repr__(self):
        if self.failed_condition is None:
            return "RegularityLabel(%s)" % self.kind.value
        return "RegularityLabel(%s, %s)" % (self.kind.value, self.failed_condition)


def bad_xy_condition(x, y, p):
    """First violated condition of x != 0, 1, -1 and y != 0, -1, -x, x + 1, -(x + 1).

    :return: name of the violated condition, None for a good pair
    """
    x, y = x % p, y % p
    checks = [
        ("x=0", x == 0),
        ("x=1", x == 1),
        ("x=-1", x == p - 1),
        ("y=0", y == 0),
        ("y=-1", y == p - 1),
        ("y=-x", (x + y) % p == 0),
        ("y=x+1", (y - x - 1) % p == 0),
        ("y=-(x+1)", (y + x + 1) % p == 0),
    ]
    for name, failed in checks:
        if failed:
            return name
    return None


def is_good_pair(x, y, p):
    return bad_xy_condition(x, y, p) is None


def good_pair_count(p):
    """Number of pairs (x, y) in F_p^2 passing the disequalities, by enumeration.

    For p >= 5 this is (p - 3)(p - 5) + 2.
    """
    p = as_modulus(p).p
    return sum(1 for x in range(p) for y in range(p) if is_good_pair(x, y, p))


def normalize_cubic(x, w, p):
    """Divides the system by x_1.

    :param x: (x_1, x_2, x_3)
    :param w: (w_1, w_2, w_3)
    :param p: modulus
    :return: (kappa, lambda) = ((1, x, y), (u, v, w)) as residues, or None if x_1 = 0
    """
    modulus = as_modulus(p)
    p = modulus.p
    x1, x2, x3 = (int(value) % p for value in x)
    if x1 == 0:
        return None
    scale = modulus.inv(x1)
    kappa = (1, x2 * scale % p, x3 * scale % p)
    lam = tuple(int(value) * scale % p for value in w)
    return kappa, lam


def r_coefficients(x, y, u, v, w, p):
    """r0..r3 with G = 0 exactly when r3 v^3 + r2 v^2 + r1 v + r0 = 0 (for good x, y)."""
    r0 = (
        w * w * x * y**3
        + w * w * y**3
        + 2 * w * w * x * x * y * y
        + 4 * w * w * x * y * y
        + 2 * w * w * y * y
        + w * w * x**3 * y
        + 3 * w * w * x * x * y
        + 3 * w * w * x * y
        + 4 * u**3 * w * x * y
        + w * w * y
        + 4 * u**3 * w * y
        + u**6
    )
    r1 = -3 * u * (y + x + 1) * (2 * w * x * y + 2 * w * y + u**3)
    r2 = 3 * u * u * (y * y + x * y + y + x * x + 2 * x + 1)
    r3 = -((y - x - 1) ** 2) * (y + x + 1)
    return tuple(value % p for value in (r0, r1, r2, r3))


def classify_regularity(x, y, u, v, w, p):
    """Regularity label of the normalized tuple (x, y, u, v, w).

    :return: RegularityLabel
    """
    p = as_modulus(p).p
    x, y, u, v, w = (int(value) % p for value in (x, y, u, v, w))
    failed = bad_xy_condition(x, y, p)
    if failed is not None:
        return RegularityLabel(Regularity.BAD_XY, failed)
    if (v * (y + x + 1) - u * u) % p == 0:
        return RegularityLabel(Regularity.VANISH1)
    r0, r1, r2, r3 = r_coefficients(x, y, u, v, w, p)
    if (r3 * v**3 + r2 * v * v + r1 * v + r0) % p == 0:
        return RegularityLabel(Regularity.VANISH2)
    return RegularityLabel(Regularity.REGULAR)


class CubicEliminationCoefficients(object):
    """All coefficient families of one normalized cubic tuple, as canonical residues.

    Families whose denominators vanish are None and flagged invalid.
    """

    def __init__(self, x, y, u, v, w, p):
        """

        :param x: kappa_2
        :param y: kappa_3
        :param u: lambda_1
        :param v: lambda_2
        :param w: lambda_3
        :param p: modulus
        """
        self._modulus = as_modulus(p)
        p = self._modulus.p
        self.x, self.y, self.u, self.v, self.w = (
            int(value) % p for value in (x, y, u, v, w)
        )
        failed = bad_xy_condition(self.x, self.y, p)
        if failed is not None:
            raise ValueError(
                "elimination coefficients undefined for (x, y) = (%d, %d): %s"
                % (self.x, self.y, failed)
            )
        self._families = dict.fromkeys(_FAMILY_SIZES)
        self.denominators = {}
        self._compute()

    @property
    def p(self):
        return self._modulus.p

    @property
    def valid(self):
        """Flag per family name, True when the family is populated."""
        return {name: values is not None for name, values in self._families.items()}

    def family(self, name):
        """Coefficients of one family as residues, index 0 holding coefficient 1.

        :param name: one of c, d, e, f, g, h, r, ftilde, gtilde
        :return: tuple of int or None
        """
        if name not in _FAMILY_SIZES:
            raise ValueError(
                "family %s not supported. Chose among %s." % (name, list(_FAMILY_SIZES))
            )
        return self._families[name]

    def __getitem__(self, key):
        """Single coefficient as FieldElement, e.g. coefficients['e5'] or ['ftilde2']."""
        name = key.rstrip("0123456789")
        index = int(key[len(name):])
        values = self.family(name)
        if values is None:
            raise ValueError("coefficient %s is undefined, its denominator vanishes" % key)
        offset = 0 if name == "r" else 1
        return FieldElement(values[index - offset], self._modulus)

    def _compute(self):
        p = self.p
        inv = self._modulus.inv
        x, y, u, v, w = self.x, self.y, self.u, self.v, self.w

        self.denominators["x(x+1)"] = x * (x + 1) % p
        self.denominators["x(1-x^2)"] = x * (1 - x * x) % p
        self._families["r"] = r_coefficients(x, y, u, v, w, p)

        inv_a = inv(x + 1)
        inv_b = inv(x * (x + 1))
        inv_c = inv(1 - x * x)
        inv_d = inv(x * (1 - x * x))
        c1 = 2 * y * inv_a % p
        c2 = -2 * u * inv_a % p
        c3 = y * (y + 1) * inv_b % p
        c4 = -2 * u * y * inv_b % p
        c5 = (u * u - v) * inv_b % p
        self._families["c"] = (c1, c2, c3, c4, c5)
        d1 = -3 * x * y * inv_c % p
        d2 = 3 * u * x * inv_c % p
        d3 = -3 * y * y * inv_c % p
        d4 = 6 * u * y * inv_c % p
        d5 = -3 * u * u * inv_c % p
        d6 = y * (1 - y * y) * inv_d % p
        d7 = 3 * u * y * y * inv_d % p
        d8 = -3 * u * u * y * inv_d % p
        d9 = (u**3 - w) * inv_d % p
        self._families["d"] = (d1, d2, d3, d4, d5, d6, d7, d8, d9)

        e_denominator = (d3 - c1 * d1 - c3 + c1 * c1) % p
        self.denominators["e"] = e_denominator
        if e_denominator == 0:
            return
        inv_e = inv(e_denominator)
        e1 = (d4 - c1 * d2 - c2 * d1 - c4 + 2 * c1 * c2) * inv_e % p
        e2 = (d5 - c2 * d2 - c5 + c2 * c2) * inv_e % p
        e3 = (d6 - c3 * d1 + c1 * c3) * inv_e % p
        e4 = (d7 - c3 * d2 - c4 * d1 + c1 * c4 + c2 * c3) * inv_e % p
        e5 = (d8 - c4 * d2 - c5 * d1 + c1 * c5 + c2 * c4) * inv_e % p
        e6 = (d9 - c5 * d2 + c2 * c5) * inv_e % p
        self._families["e"] = (e1, e2, e3, e4, e5, e6)

        ftilde = (
            (e6 - e2 * e4 + e1 * e2 * e3) % p,
            -(e3 * e3 - c1 * e3 + c3) % p,
            -(2 * e3 * e4 - c1 * e4 - e1 * e3 * e3 - c2 * e3 + c3 * e1 + c4) % p,
            -(
                e3 * e5 - c1 * e5 + e4 * e4 - e1 * e3 * e4 - c2 * e4 + c3 * e2 + c4 * e1 + c5
            ) % p,
            -(e3 * e6 - c1 * e6 + e4 * e5 - e1 * e3 * e5 - c2 * e5 + c4 * e2 + c5 * e1) % p,
            -(e4 * e6 - e1 * e3 * e6 - c2 * e6 + c5 * e2) % p,
        )
        self._families["ftilde"] = ftilde
        f_denominator = (e5 - e1 * e4 - e2 * e3 + e1 * e1 * e3) % p
        self.denominators["f"] = f_denominator
        if f_denominator == 0:
            return
        inv_f = inv(f_denominator)
        f1, f2, f3, f4, f5, f6 = (value * inv_f % p for value in ftilde)
        self._families["f"] = (f1, f2, f3, f4, f5, f6)

        gtilde = (
            -f2 % p,
            -(f3 - f1 * f2 + e1 * f2) % p,
            -(f4 - f1 * f3 + e1 * f3 - e3) % p,
            -(f5 - f1 * f4 + e1 * f4 - e4) % p,
            -(f6 - f1 * f5 + e1 * f5 - e5) % p,
            (f1 * f6 - e1 * f6 + e6) % p,
        )
        self._families["gtilde"] = gtilde
        g_denominator = (f1 * f1 - e1 * f1 + e2) % p
        self.denominators["g"] = g_denominator
        if g_denominator == 0:
            return
        inv_g = inv(g_denominator)
        g1, g2, g3, g4, g5, g6 = (value * inv_g % p for value in gtilde)
        self._families["g"] = (g1, g2, g3, g4, g5, g6)

        self.denominators["h"] = g1
        if g1 == 0:
            return
        inv_h = inv(g1)
        self._families["h"] = tuple(
            value * inv_h % p
            for value in (
                g2 + f1 * g1,
                g3 + f1 * g2 - f2,
                g4 + f1 * g3 - f3,
                g5 + f1 * g4 - f4,
                g6 + f1 * g5 - f5,
                f1 * g6 - f6,
            )
        )

    def dispatch(self):
        """Solver branch implied by the vanishing denominators.

        :return: Regularity member, or None when a denominator that only depends on
         (x, y) vanishes (the solvers then fall back to the per-d scan)
        """
        if self._families["e"] is None:
            return None
        if self._families["f"] is None:
            return Regularity.VANISH1
        if self._families["g"] is None:
            return Regularity.VANISH2
        if self._families["h"] is None:
            return None
        return Regularity.REGULAR


def cubic_coefficients(x, y, u, v, w, p):
    """CubicEliminationCoefficients of a normalized tuple; raises ValueError for a bad
    (x, y) pair."""
    return CubicEliminationCoefficients(x, y, u, v, w, p)
