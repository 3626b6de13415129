from fractions import Fraction

import pytest
from hpfg.Analysis.collision import collision_experiment, exhaustive_collision_probability
from hpfg.Util.param_util import ConfigError


def test_collision_experiment():
    report = collision_experiment(101, 10**6, seed=0)
    assert report.trials == 10**6
    assert report.expected == 1 / 101
    assert report.within_3_sigma
    assert all(report.checks().values())


def test_collision_determinism():
    first = collision_experiment(11, 5000, seed=3)
    second = collision_experiment(11, 5000, seed=3)
    assert first == second


def test_exhaustive_collision():
    assert exhaustive_collision_probability(5) == Fraction(1, 5)
    reversal = [6, 5, 4, 3, 2, 1, 0]
    assert exhaustive_collision_probability(7, q=(3, 0, 2), permutation=reversal) == Fraction(1, 7)


def test_errors():
    with pytest.raises(ConfigError):
        collision_experiment(5, 0)
    with pytest.raises(ConfigError):
        exhaustive_collision_probability(5, permutation=[0, 0, 1, 2, 3])


if __name__ == "__main__":
    pytest.main()
