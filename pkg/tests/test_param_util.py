import numpy as np
from numpy import testing as npt
import pytest
from hpfg.Util.param_util import (
    ConfigError,
    GuardExceededError,
    all_tuples,
    check_guard,
    index_to_tuple,
    make_rng,
    parse_int_list,
    resolve_seed,
    tuple_to_index,
)
from hpfg.Util.parallel_util import merge_counts, partitioned_map, split_work


def test_check_guard():
    check_guard(10, 10)
    with pytest.raises(GuardExceededError):
        check_guard(11, 10, what="test")


def test_parse_int_list():
    assert parse_int_list("1, 2,3") == (1, 2, 3)
    assert parse_int_list([4, 5]) == (4, 5)
    assert parse_int_list(7) == (7,)
    assert parse_int_list(None) is None
    with pytest.raises(ConfigError):
        parse_int_list("1,a")


def test_resolve_seed(monkeypatch):
    monkeypatch.delenv("HPFG_SEED", raising=False)
    assert resolve_seed() == 0
    assert resolve_seed(default=4) == 4
    monkeypatch.setenv("HPFG_SEED", "12")
    assert resolve_seed() == 12
    assert resolve_seed(3) == 3
    monkeypatch.setenv("HPFG_SEED", "twelve")
    with pytest.raises(ConfigError):
        resolve_seed()


def test_make_rng():
    rng = make_rng(5)
    assert make_rng(rng) is rng
    expected = np.random.default_rng(5).integers(0, 100, 10)
    npt.assert_array_equal(make_rng(5).integers(0, 100, 10), expected)


def test_tuple_index():
    assert tuple_to_index((1, 2), 5) == 7
    assert index_to_tuple(7, 5, 2) == (1, 2)
    tuples = all_tuples(3, 2)
    assert tuples.shape == (9, 2)
    npt.assert_array_equal(tuples[5], [1, 2])
    for index, values in enumerate(tuples):
        assert tuple_to_index(values, 3) == index
    assert all_tuples(3, 0).shape == (1, 0)


def _count_residues(part):
    return {int(value) % 3: 1 for value in part}


def test_parallel_util():
    parts = split_work(np.arange(10), 3)
    assert [len(part) for part in parts] == [4, 3, 3]
    assert len(split_work(np.arange(2), 5)) == 2
    serial = merge_counts(partitioned_map(_count_residues, np.arange(10), jobs=1))
    parallel = merge_counts(partitioned_map(_count_residues, np.arange(10), jobs=2))
    assert serial == parallel
    assert list(merge_counts([{2: 1, 0: 1}, {1: 2, 0: 3}]).items()) == [(0, 4), (1, 2), (2, 1)]


if __name__ == "__main__":
    pytest.main()
