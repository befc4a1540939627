import json

from thetasym.catalog import MINUS, PLUS
from thetasym.core import parse_symbol
from thetasym.oracle import (
    VerificationReport,
    brute_first_occurrence,
    default_scan_bound,
    verify_counts,
    verify_f1,
    verify_variant_uniqueness,
)
from thetasym.theta import TowerContext


def test_brute_first_occurrence_examples():
    assert brute_first_occurrence(parse_symbol("[1,0|1]"), PLUS, 6) == 1
    assert brute_first_occurrence(parse_symbol("[1|]"), PLUS, 6) == 0
    assert brute_first_occurrence(parse_symbol("[1|]"), MINUS, 6) == 2
    assert brute_first_occurrence(parse_symbol("[|2,1,0]"), PLUS, 2) is None


def test_scan_bound_formula():
    s = parse_symbol("[|2,1,0]")
    assert default_scan_bound(s) == 2 + 2 + 1


def test_verify_f1_passes():
    report = verify_f1(4)
    assert report.passed and report.checked > 0
    assert verify_f1(0).passed


def test_verify_f1_detects_injected_failure():
    report = verify_f1(2, index_offset=1)
    assert not report.passed
    assert report.failures


def test_verify_counts():
    report = verify_counts(6)
    assert report.passed
    # the rank-1 and rank-2 symplectic rows are among the checks
    assert report.checked > 20


def test_verify_variant_uniqueness_small():
    for ctx in (
        TowerContext(eps_minus_one=PLUS),
        TowerContext(eps_minus_one=MINUS),
        TowerContext(
            eps_minus_one=PLUS,
            orient_left=PLUS,
            orient_right=MINUS,
            orient_left_alt=MINUS,
            orient_right_alt=PLUS,
        ),
    ):
        assert verify_variant_uniqueness(1, ctx).passed


def test_report_json_shape():
    report = VerificationReport()
    report.record(True, "x", 1, 1)
    report.record(False, "y", 2, 3)
    report.elapsed = 0.5
    data = json.loads(report.to_json())
    assert set(data) == {"checked", "failures", "elapsed_ms"}
    assert data["checked"] == 2
    assert data["failures"] == [{"input": "y", "expected": "2", "actual": "3"}]
    assert data["elapsed_ms"] == 500.0
    assert not report.passed
