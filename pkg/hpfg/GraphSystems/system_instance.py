from hpfg.FiniteField.ff_core import FieldElement, as_modulus
from hpfg.Util.param_util import ShapeError, ModulusMismatchError

"""Power-map systems Phi^(n)(b) x = w and their solution sets."""


def _residues(values, modulus, name):
    if values is None:
        raise ShapeError("%s must be given" % name)
    residues = []
    for value in values:
        if isinstance(value, FieldElement):
            if value.modulus != modulus:
                raise ModulusMismatchError(
                    "%s holds an element mod %d, expected mod %d"
                    % (name, value.modulus.p, modulus.p)
                )
            residues.append(value.value)
        else:
            residues.append(int(value) % modulus.p)
    return tuple(residues)


class SystemInstance(object):
    """The system sum_j x_j b_j^i = w_i for i = 1..n in the unknowns b in F_p^k."""

    def __init__(self, p, x, w, n=None, k=None):
        """

        :param p: modulus, PrimeModulus or int
        :param x: k-tuple over F_p
        :param w: n-tuple over F_p
        :param n: degree; defaults to len(w)
        :param k: copy count; defaults to len(x)
        """
        self._modulus = as_modulus(p)
        self._x = _residues(x, self._modulus, "x")
        self._w = _residues(w, self._modulus, "w")
        n = len(self._w) if n is None else int(n)
        k = len(self._x) if k is None else int(k)
        if n < 1 or k < 1:
            raise ShapeError("degree n and copy count k must be >= 1, got n=%s, k=%s" % (n, k))
        if len(self._x) != k:
            raise ShapeError("x has length %s, expected k=%s" % (len(self._x), k))
        if len(self._w) != n:
            raise ShapeError("w has length %s, expected n=%s" % (len(self._w), n))
        self._n = n
        self._k = k

    @property
    def modulus(self):
        return self._modulus

    @property
    def p(self):
        return self._modulus.p

    @property
    def n(self):
        return self._n

    @property
    def k(self):
        return self._k

    @property
    def x(self):
        """Column x as canonical residues."""
        return self._x

    @property
    def w(self):
        """Right-hand side w as canonical residues."""
        return self._w

    def is_solution(self, b):
        """Whether Phi^(n)(b) x = w holds exactly.

        :param b: k-tuple of residues
        :return: bool
        """
        return phi_apply(b, self._x, self._n, self.p) == self._w

    def __eq__(self, other):
        return (
            isinstance(other, SystemInstance)
            and self._modulus == other._modulus
            and self._x == other._x
            and self._w == other._w
        )

    def __hash__(self):
        return hash((self.p, self._x, self._w))

    def __repr__(self):
        return "SystemInstance(p=%d, x=%s, w=%s)" % (self.p, self._x, self._w)


class SolutionSet(object):
    """Solutions of one system, strictly increasing in lexicographic order of the
    canonical residues (leftmost component most significant)."""

    def __init__(self, solutions, p, branch=None):
        """

        :param solutions: iterable of k-tuples of residues; sorted and deduplicated here
        :param p: modulus
        :param branch: name of the solver path that produced the set, if any
        """
        self._modulus = as_modulus(p)
        self._solutions = tuple(
            sorted({_residues(b, self._modulus, "solution") for b in solutions})
        )
        self._branch = branch

    @property
    def solutions(self):
        """Tuple of k-tuples of int."""
        return self._solutions

    @property
    def eta(self):
        """Number of solutions."""
        return len(self._solutions)

    @property
    def branch(self):
        return self._branch

    @property
    def p(self):
        return self._modulus.p

    def __len__(self):
        return len(self._solutions)

    def __iter__(self):
        return iter(self._solutions)

    def __contains__(self, b):
        return tuple(int(v) % self.p for v in b) in self._solutions

    def __getitem__(self, index):
        return self._solutions[index]

    def __eq__(self, other):
        if isinstance(other, SolutionSet):
            return self._modulus == other._modulus and self._solutions == other._solutions
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self._solutions))

    def __repr__(self):
        return "SolutionSet(eta=%d, solutions=%s)" % (self.eta, list(self._solutions))

    def to_list(self):
        """Solutions as nested lists, for serialization."""
        return [list(b) for b in self._solutions]


def phi_apply(b, x, n, p):
    """Computes w = Phi^(n)(b) x, i.e. w_i = sum_j b_j^i x_j for i = 1..n.

    :param b: k-tuple
    :param x: k-tuple
    :param n: degree
    :param p: modulus
    :return: n-tuple of residues
    """
    modulus = as_modulus(p)
    b = _residues(b, modulus, "b")
    x = _residues(x, modulus, "x")
    if len(b) != len(x):
        raise ShapeError("b has length %s but x has length %s" % (len(b), len(x)))
    p = modulus.p
    w = []
    powers = list(b)
    for _ in range(int(n)):
        w.append(sum(power * coefficient for power, coefficient in zip(powers, x)) % p)
        powers = [power * base % p for power, base in zip(powers, b)]
    return tuple(w)


def lex_index(b, solution_set):
    """0-based position of b in the lexicographically sorted solution set.

    :param b: k-tuple
    :param solution_set: SolutionSet
    :return: index j
    """
    key = tuple(int(v) % solution_set.p for v in b)
    try:
        return solution_set.solutions.index(key)
    except ValueError:
        raise ValueError("%s is not in the solution set" % (key,))


def solution_from_index(w, j, x, solver):
    """Inverse of lex_index: the j-th solution (0-based) of Phi^(n)(b) x = w.

    :param w: n-tuple
    :param j: index
    :param x: k-tuple
    :param solver: object with a modulus attribute and solve(instance) method, e.g.
     GraphSystemSolver
    :return: k-tuple of residues
    """
    solution_set = solver.solve(SystemInstance(solver.modulus, x, w))
    if not 0 <= j < solution_set.eta:
        raise IndexError(
            "index %s out of range for a solution set of size %s" % (j, solution_set.eta)
        )
    return solution_set[j]
