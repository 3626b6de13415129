import numpy as np

from hpfg.FiniteField.ff_core import as_modulus
from hpfg.Util.param_util import ConfigError, make_rng


class BlackBox(object):
    """Oracle B(r, s) = pi(s - Q(r)) hiding the univariate polynomial
    Q(X) = q_1 X + ... + q_n X^n behind a secret permutation pi of F_p.

    B is constant exactly on the shifted graphs {(r, Q(r) + z)}.
    """

    def __init__(self, p, q, permutation=None, rng=None):
        """

        :param p: modulus
        :param q: hidden coefficients (q_1, ..., q_n)
        :param permutation: secret bijection as a length-p sequence; drawn from rng when None
        :param rng: seed or numpy Generator
        """
        self._modulus = as_modulus(p)
        p = self._modulus.p
        self._q = tuple(int(value) % p for value in q)
        if permutation is None:
            permutation = make_rng(rng).permutation(p)
        permutation = np.asarray(permutation, dtype=np.int64)
        if permutation.shape != (p,) or not np.array_equal(np.sort(permutation), np.arange(p)):
            raise ConfigError("the secret map must be a permutation of F_%d" % p)
        self._permutation = permutation
        self.queries = 0

    @property
    def p(self):
        return self._modulus.p

    @property
    def n(self):
        return len(self._q)

    @property
    def q(self):
        """Hidden coefficients, for checking recovered values."""
        return self._q

    def hidden_values(self, r):
        """Q(r) for scalar or array r."""
        p = self.p
        r = np.asarray(r, dtype=np.int64) % p
        values = np.zeros_like(r)
        for coefficient in reversed(self._q):
            values = (values + coefficient) * r % p
        return values

    def query(self, r, s):
        """B(r, s) = pi(s - Q(r)); counts one query per call.

        :param r: point in F_p
        :param s: second coordinate in F_p
        :return: int
        """
        self.queries += 1
        return int(self._permutation[(int(s) - int(self.hidden_values(r))) % self.p])

    def query_batch(self, r, s):
        """Vectorized query over arrays r, s; counts one query per entry."""
        r = np.asarray(r, dtype=np.int64)
        s = np.asarray(s, dtype=np.int64)
        self.queries += int(r.size)
        return self._permutation[(s - self.hidden_values(r)) % self.p]


def oracle_query(black_box, r, s):
    return black_box.query(r, s)
