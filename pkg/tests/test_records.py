# ----------------------------------------------------------
# Domination Lab
# File: tests/test_records.py
# ----------------------------------------------------------
# Description:
# Tests ClaimReport and ScanRecord in domlab/records.py:
# key order, status helpers and rebuilding from JSON objects
# and CSV rows (where every cell is a string).
# ----------------------------------------------------------

import pytest

from domlab.exceptions import ReportError
from domlab.records import (
    REPORT_FIELDS,
    SCAN_FIELDS,
    ClaimReport,
    ClaimStatus,
    ScanRecord,
    Verdict,
)


def _report(status=ClaimStatus.PASS):
    return ClaimReport("R.k3", "R_k family", "gamma = 7k", {"gamma": 21, "ratio": "7/20"},
                       {"gamma": 21, "ratio": "7/20"}, status, 1.23456, ["checked"])


def _record(verdict=Verdict.HOLDS):
    return ScanRecord(3, "C~", 4, 1, 3, 1, "kelmans", 2, verdict, Verdict.HOLDS)


# ----------------------------------------------------------
# ClaimReport
# ----------------------------------------------------------
def test_report_dict_key_order_and_rounding():
    data = _report().to_dict()
    assert list(data) == REPORT_FIELDS
    assert data["runtime_s"] == 1.235
    assert data["status"] == "pass"


@pytest.mark.parametrize("status, passed", [
    (ClaimStatus.PASS, True),
    (ClaimStatus.FAIL, False),
    (ClaimStatus.INCONCLUSIVE, False),
])
def test_report_passed(status, passed):
    assert _report(status).passed is passed


def test_report_str():
    assert str(_report()) == "R.k3: pass (1.23s)"


def test_report_from_csv_row():
    row = {
        "claim_id": "A.table", "citation": "c", "quote": "q",
        "expected": '{"v": 8}', "computed": '{"v": 8}',
        "status": "fail", "runtime_s": "0.5", "notes": '["mismatch"]',
    }
    report = ClaimReport.from_dict(row)
    assert report.expected == {"v": 8}
    assert report.status is ClaimStatus.FAIL
    assert report.runtime_s == 0.5
    assert report.notes == ["mismatch"]


def test_report_from_json_object():
    original = _report(ClaimStatus.INCONCLUSIVE)
    rebuilt = ClaimReport.from_dict(original.to_dict())
    assert rebuilt.status is ClaimStatus.INCONCLUSIVE
    assert rebuilt.computed == original.computed


@pytest.mark.parametrize("row", [
    {"claim_id": "X"},
    {"claim_id": "X", "expected": {}, "computed": {}, "status": "maybe"},
    {"claim_id": "X", "expected": {}, "computed": {}, "status": "pass", "runtime_s": "fast"},
])
def test_report_from_bad_data(row):
    with pytest.raises(ReportError, match="Invalid claim report"):
        ClaimReport.from_dict(row)


# ----------------------------------------------------------
# ScanRecord
# ----------------------------------------------------------
def test_scan_record_dict():
    data = _record().to_dict()
    assert list(data) == SCAN_FIELDS
    assert data["verdict"] == "holds"
    assert data["notes"] == []


def test_scan_record_violated():
    assert _record(Verdict.VIOLATED).violated
    assert not _record(Verdict.INCONCLUSIVE).violated


def test_scan_record_from_csv_row_with_blank_gamma():
    row = {key: str(value) for key, value in _record().to_dict().items()}
    row.update({"gamma": "", "verdict": "inconclusive", "status": "timeout", "notes": "[]"})
    record = ScanRecord.from_dict(row)
    assert record.gamma is None
    assert record.kappa == 3
    assert record.verdict is Verdict.INCONCLUSIVE
    assert record.line_number == 3


def test_scan_record_from_bad_data():
    with pytest.raises(ReportError, match="Invalid scan record"):
        ScanRecord.from_dict({"line_number": "x"})
