import json

import pytest

from decoperm import harness
from decoperm.bijections import BIJECTION_IDS
from decoperm.errors import CapExceeded, UnknownBijection
from decoperm.harness import (
    Report,
    catalan,
    check_bijection,
    check_enumeration,
    check_oracles,
    check_statistics,
    check_structure,
    check_theorems,
    check_uniformity,
    contains_321_bruteforce,
    count_cells,
    run_all,
)
from decoperm.polyomino import DecoPolyomino


@pytest.mark.parametrize("k", BIJECTION_IDS)
def test_n1_checks_pass(k):
    for report in (check_bijection(1, k), check_statistics(1, k)):
        assert report.passed and report.total_cases == 1


def test_check_bijection_n6_map2():
    report = check_bijection(6, 2)
    assert report.passed
    assert report.total_cases == 720
    assert report.failures == []


def test_check_statistics_map2_counts_identities():
    report = check_statistics(5, 2)
    assert report.passed and report.details["identities"] == 5


@pytest.mark.parametrize("n, count", [(1, 1), (5, 42)])
def test_check_theorems(n, count):
    report = check_theorems(n)
    assert report.passed
    assert report.details["avoiders"] == report.details["parallelogram_2"] == count
    assert report.details["parallelogram_4"] == count


def test_structural_checks_small():
    for n in range(1, 6):
        assert check_enumeration(n).passed
        assert check_structure(n).passed
        assert check_oracles(n).passed


def test_uniformity():
    assert check_uniformity(1, 10, 0).passed
    report = check_uniformity(4, 100_000, 42)
    assert report.passed and report.total_cases == 100_000
    assert report.details["chi2"] < report.details["threshold"]
    assert check_uniformity(4, 2000, 3).details == check_uniformity(4, 2000, 3).details


def test_caps(monkeypatch):
    with pytest.raises(CapExceeded):
        check_bijection(9, 1)
    with pytest.raises(CapExceeded):
        check_theorems(4, cap=3)
    with pytest.raises(CapExceeded):
        check_uniformity(7, 10, 0)
    monkeypatch.setenv("DECO_MAX_N", "3")
    with pytest.raises(CapExceeded):
        check_statistics(4, 2)
    assert check_statistics(3, 2).passed
    with pytest.raises(UnknownBijection):
        check_bijection(3, 9)


def test_report_truncates_failures_but_counts_all():
    report = Report("demo", 3)
    for i in range(25):
        report.fail(f"case{i}", 0, 1)
    assert not report.passed
    assert report.failure_count == 25
    assert len(report.failures) == harness.MAX_LISTED_FAILURES
    record = json.loads(report.to_record())
    assert record["passed"] is False and record["failure_count"] == 25
    assert report.to_text().startswith("[FAIL] demo n=3")


def test_failing_identity_is_reported(monkeypatch):
    monkeypatch.setitem(harness.IDENTITIES, 6, {"always off": lambda pi, d: (0, 1)})
    report = check_statistics(3, 6)
    assert not report.passed and report.failure_count == 6
    case, expected, actual = report.failures[0]
    assert case == "1 2 3 [always off]" and (expected, actual) == (0, 1)


def test_oracles_themselves():
    assert contains_321_bruteforce([3, 2, 1])
    assert not contains_321_bruteforce([3, 5, 1, 2, 6, 4])
    assert count_cells(DecoPolyomino([(0, 2), (1, 3)])) == 4
    assert [catalan(n) for n in range(1, 9)] == [1, 2, 5, 14, 42, 132, 429, 1430]


def test_run_all_passes_n4():
    reports = run_all(4, uniformity=True, samples=5000, seed=1)
    assert all(r.passed for r in reports)
    assert {r.check_name for r in reports} >= {"theorems", "uniformity", "bijection-5"}
