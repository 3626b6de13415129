import numpy as np
from numpy import testing as npt
import pytest
from hpfg.QuantumSim.black_box import BlackBox, oracle_query
from hpfg.Util.param_util import ConfigError


class TestBlackBox(object):
    def setup_method(self):
        self.p = 7
        self.box = BlackBox(self.p, (3, 0, 2), rng=0)

    def test_hidden_values(self):
        r = np.arange(self.p)
        npt.assert_array_equal(self.box.hidden_values(r), (3 * r + 2 * r**3) % self.p)
        assert self.box.n == 3
        assert self.box.q == (3, 0, 2)

    def test_constant_on_shifted_graphs(self):
        p = self.p
        for z in range(p):
            values = {self.box.query(r, (int(self.box.hidden_values(r)) + z) % p) for r in range(p)}
            assert len(values) == 1
        labels = [self.box.query(0, z) for z in range(p)]
        assert sorted(labels) == list(range(p))

    def test_query_counter(self):
        start = self.box.queries
        oracle_query(self.box, 1, 2)
        self.box.query_batch(np.arange(4), np.arange(4))
        assert self.box.queries == start + 5

    def test_batch_matches_scalar(self):
        r = np.array([0, 1, 5, 6])
        s = np.array([2, 2, 3, 0])
        batch = self.box.query_batch(r, s)
        npt.assert_array_equal(batch, [self.box.query(a, b) for a, b in zip(r, s)])


def test_explicit_permutation():
    box = BlackBox(5, (1,), permutation=[4, 3, 2, 1, 0])
    # B(r, s) = pi(s - r)
    assert box.query(2, 2) == 4
    assert box.query(0, 1) == 3


def test_bad_permutation():
    with pytest.raises(ConfigError):
        BlackBox(5, (1, 2), permutation=[0, 0, 1, 2, 3])
    with pytest.raises(ConfigError):
        BlackBox(5, (1, 2), permutation=[0, 1, 2, 3])
    with pytest.raises(ValueError):
        BlackBox(6, (1, 2))


if __name__ == "__main__":
    pytest.main()
