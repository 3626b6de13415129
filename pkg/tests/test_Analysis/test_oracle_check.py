import pytest
from hpfg.Analysis.oracle_check import (
    OracleReport,
    regularity_census,
    verify_cubic_solver,
    verify_quadratic_solver,
)
from hpfg.GraphSystems.cubic_coefficients import Regularity, good_pair_count


def test_report_checks():
    report = OracleReport(p=5, n=3)
    report.record("vanish2", 11, True)
    report.record("regular", 3, False)
    assert report.max_eta_good == 11
    assert report.branch_counts == {"vanish2": 1, "regular": 1}
    checks = report.checks()
    assert not checks["eta_le_10"]
    assert not checks["branch_caps"]
    assert checks["no_mismatches"]


def test_quadratic_sweep():
    report = verify_quadratic_solver(5)
    assert report.instances == 625
    assert report.mismatches == 0
    assert report.count_failures == 0
    assert set(report.branch_counts) <= {"zero_x", "one_zero", "opposite", "generic"}
    assert report.branch_counts["zero_x"] == 25


def test_cubic_sweep_subset():
    report = verify_cubic_solver(5, rng=0, pairs=[(2, 1), (3, 3), (1, 1)])
    assert report.instances == 3 * 125
    assert report.mismatches == 0
    assert report.good_pairs == good_pair_count(5)
    assert report.label_disagreements == 0


def test_regularity_census():
    p = 7
    census = regularity_census(p)
    assert sum(census.values()) == p**5
    assert census[Regularity.BAD_XY.value] == (p * p - good_pair_count(p)) * p**3
    assert census[Regularity.REGULAR.value] > 0


if __name__ == "__main__":
    pytest.main()
