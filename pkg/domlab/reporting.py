# ----------------------------------------------------------
# Domination Lab
# File: domlab/reporting.py
# ----------------------------------------------------------
# Description:
# Implements:
#   1. Report persistence: claim and scan reports as JSON or CSV.
#   2. Observer Design Pattern: logging and auto-saving after each claim.
#
# Classes:
#   - ReportLog          → Collects claim reports, saves and loads them.
#   - ReportObserver     → Abstract observer base class.
#   - LoggingObserver    → Logs every finished claim.
#   - AutoSaveObserver   → Re-emits the report file when auto_save is on.
#
# Dependencies:
#   - pandas (CSV reading and writing)
#   - domlab.records.ClaimReport
#   - domlab.exceptions.ReportError
# ----------------------------------------------------------

import json
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd

from domlab.exceptions import ReportError
from domlab.records import REPORT_FIELDS, ClaimReport

FORMATS = ("json", "csv")
# nested blocks stored as JSON text inside CSV cells
_NESTED = ("expected", "computed", "notes")


def _check_format(fmt: str) -> str:
    fmt = (fmt or "json").lower()
    if fmt not in FORMATS:
        raise ReportError(f"Unknown report format: {fmt}")
    return fmt


def _flatten(row: Dict[str, Any]) -> Dict[str, Any]:
    return {
        key: json.dumps(value, sort_keys=False) if isinstance(value, (dict, list)) else value
        for key, value in row.items()
    }


# ==========================================================
# Record Emission
# ==========================================================
def emit_records(rows: Sequence[Dict[str, Any]], fmt: str, out: Union[str, Path],
                 columns: Sequence[str], encoding: str = "utf-8") -> Path:
    """
    Write dictionaries in a fixed column order.

    JSON is a top-level array; CSV has one row per record with nested
    blocks as JSON text. An empty list gives "[]" or a header-only CSV.
    """
    fmt = _check_format(fmt)
    target = Path(out)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        ordered = [{key: row.get(key) for key in columns} for row in rows]
        if fmt == "json":
            target.write_text(json.dumps(ordered, indent=2) + "\n", encoding=encoding)
        else:
            df = pd.DataFrame([_flatten(row) for row in ordered], columns=list(columns))
            df.to_csv(target, index=False, encoding=encoding)
        logging.info(f"Report with {len(ordered)} records saved to {target}")
        return target
    except OSError as e:
        logging.error(f"Failed to write report: {e}")
        raise ReportError(f"Failed to write report {target}: {e}") from e


def emit_report(reports: Iterable[ClaimReport], fmt: str = "json",
                out: Union[str, Path] = "claims.json", encoding: str = "utf-8") -> Path:
    """Write claim reports with keys in report order."""
    return emit_records([r.to_dict() for r in reports], fmt, out, REPORT_FIELDS, encoding)


def load_records(path: Union[str, Path], fmt: Optional[str] = None,
                 encoding: str = "utf-8") -> List[Dict[str, Any]]:
    """Read a JSON or CSV report back into dictionaries (format from the suffix by default)."""
    source = Path(path)
    fmt = _check_format(fmt or source.suffix.lstrip(".") or "json")
    try:
        if fmt == "json":
            data = json.loads(source.read_text(encoding=encoding))
            if not isinstance(data, list):
                raise ReportError(f"Report {source} is not a JSON array")
            return data
        df = pd.read_csv(source, encoding=encoding, dtype=str, keep_default_na=False)
        return [row.to_dict() for _, row in df.iterrows()]
    except FileNotFoundError as e:
        raise ReportError(f"Report file not found: {source}") from e
    except (OSError, json.JSONDecodeError, pd.errors.ParserError) as e:
        raise ReportError(f"Failed to read report {source}: {e}") from e


# ==========================================================
# Report Log
# ==========================================================
class ReportLog:
    """
    Ordered claim reports with save() / load() in JSON or CSV.
    """

    def __init__(self, file_path: Optional[Union[str, Path]] = None, fmt: str = "json",
                 encoding: str = "utf-8"):
        self.file_path = Path(file_path or "./reports/claims.json")
        self.fmt = _check_format(fmt)
        self.encoding = encoding
        self.records: List[ClaimReport] = []

    def append(self, report: ClaimReport) -> None:
        if not isinstance(report, ClaimReport):
            raise ReportError("Invalid report type for the report log.")
        self.records.append(report)

    def clear(self) -> None:
        self.records.clear()

    def save(self) -> Path:
        return emit_report(self.records, self.fmt, self.file_path, self.encoding)

    def load(self) -> None:
        """Replace the records with the contents of the report file (missing file → empty)."""
        if not self.file_path.exists():
            logging.warning(f"No existing report found at {self.file_path}")
            self.records = []
            return
        rows = load_records(self.file_path, self.fmt, self.encoding)
        self.records = [ClaimReport.from_dict(row) for row in rows]
        logging.info(f"Loaded {len(self.records)} claim reports from {self.file_path}")

    def counts(self) -> Dict[str, int]:
        totals = {"pass": 0, "fail": 0, "inconclusive": 0}
        for report in self.records:
            totals[report.status.value] += 1
        return totals

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __repr__(self) -> str:
        counts = self.counts()
        return (f"ReportLog(size={len(self.records)}, file='{self.file_path}', "
                f"pass={counts['pass']}, fail={counts['fail']}, "
                f"inconclusive={counts['inconclusive']})")


# ==========================================================
# OBSERVER PATTERN IMPLEMENTATION
# ==========================================================
class ReportObserver(ABC):
    """Abstract base class for claim observers."""

    @abstractmethod
    def update(self, report: Optional[ClaimReport]) -> None:
        """React to a finished claim."""
        pass  # pragma: no cover


class LoggingObserver(ReportObserver):
    """Logs each finished claim."""

    def update(self, report: Optional[ClaimReport]) -> None:
        if report is None:
            raise AttributeError("Report cannot be None")
        line = f"Claim finished: {report.claim_id} -> {report.status.value} ({report.runtime_s:.2f}s)"
        if report.passed:
            logging.info(line)
        else:
            logging.warning(line + (f"; {report.notes[-1]}" if report.notes else ""))


class AutoSaveObserver(ReportObserver):
    """Saves the report file after every claim when auto_save is enabled."""

    def __init__(self, verifier: Any):
        if not hasattr(verifier, "config") or not hasattr(verifier, "save_report"):
            raise TypeError("Verifier must have 'config' and 'save_report' attributes")
        self.verifier = verifier

    def update(self, report: Optional[ClaimReport]) -> None:
        if report is None:
            raise AttributeError("Report cannot be None")
        if not getattr(self.verifier.config, "auto_save", False):
            return
        try:
            self.verifier.save_report()
            logging.info("Report auto-saved.")
        except ReportError as e:
            logging.error(f"AutoSaveObserver failed during save: {e}")
            raise
