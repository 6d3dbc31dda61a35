# ----------------------------------------------------------
# Domination Lab
# File: domlab/records.py
# ----------------------------------------------------------
# Description:
# Record types written to reports:
#   - ClaimReport → one verified claim (expected vs computed)
#   - ScanRecord  → one corpus graph checked against a bound
#
# Both serialize to plain dictionaries with a fixed key order and
# rebuild from them, so JSON and CSV reports can be loaded back.
# Exact rationals travel as "p/q" strings, never as floats.
# ----------------------------------------------------------

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from domlab.exceptions import ReportError

REPORT_FIELDS = ["claim_id", "citation", "quote", "expected", "computed",
                 "status", "runtime_s", "notes"]
SCAN_FIELDS = ["line_number", "graph6", "n", "gamma", "kappa", "bound", "conjecture",
               "reed_bound", "verdict", "reed_verdict", "status", "notes"]


class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


def _decode_block(value: Any) -> Any:
    """CSV cells hold nested blocks as JSON text."""
    if isinstance(value, str):
        try:
            return json.loads(value)
        except json.JSONDecodeError:
            return value
    return value


# ==========================================================
# Dataclass: ClaimReport
# ==========================================================
@dataclass
class ClaimReport:
    """Outcome of one registered claim."""

    claim_id: str
    citation: str
    quote: str
    expected: Dict[str, Any]
    computed: Dict[str, Any]
    status: ClaimStatus
    runtime_s: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status is ClaimStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        """Serializable dictionary in report key order."""
        return {
            "claim_id": self.claim_id,
            "citation": self.citation,
            "quote": self.quote,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status.value,
            "runtime_s": round(self.runtime_s, 3),
            "notes": list(self.notes),
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> "ClaimReport":
        """Rebuild a report from a JSON object or a CSV row."""
        try:
            notes = _decode_block(data.get("notes", []))
            if notes is None or (isinstance(notes, float) and notes != notes):
                notes = []
            return ClaimReport(
                claim_id=str(data["claim_id"]),
                citation=str(data.get("citation", "")),
                quote=str(data.get("quote", "")),
                expected=_decode_block(data["expected"]),
                computed=_decode_block(data["computed"]),
                status=ClaimStatus(str(data["status"])),
                runtime_s=float(data.get("runtime_s", 0.0)),
                notes=list(notes) if isinstance(notes, list) else [str(notes)],
            )
        except (KeyError, ValueError, TypeError) as e:
            raise ReportError(f"Invalid claim report data: {e}")

    def __str__(self) -> str:
        return f"{self.claim_id}: {self.status.value} ({self.runtime_s:.2f}s)"


# ==========================================================
# Dataclass: ScanRecord
# ==========================================================
@dataclass
class ScanRecord:
    """One corpus graph: gamma, kappa and the verdict against the selected bound."""

    line_number: int
    graph6: str
    n: int
    gamma: Optional[int]
    kappa: Optional[int]
    bound: int
    conjecture: str
    reed_bound: int
    verdict: Verdict
    reed_verdict: Verdict
    status: str = "optimal"
    notes: List[str] = field(default_factory=list)

    @property
    def violated(self) -> bool:
        return self.verdict is Verdict.VIOLATED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "line_number": self.line_number,
            "graph6": self.graph6,
            "n": self.n,
            "gamma": self.gamma,
            "kappa": self.kappa,
            "bound": self.bound,
            "conjecture": self.conjecture,
            "reed_bound": self.reed_bound,
            "verdict": self.verdict.value,
            "reed_verdict": self.reed_verdict.value,
            "status": self.status,
            "notes": list(self.notes),
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> "ScanRecord":
        try:
            def optional_int(value: Any) -> Optional[int]:
                if value is None or value == "" or (isinstance(value, float) and value != value):
                    return None
                return int(value)

            notes = _decode_block(data.get("notes", []))
            return ScanRecord(
                line_number=int(data["line_number"]),
                graph6=str(data["graph6"]),
                n=int(data["n"]),
                gamma=optional_int(data.get("gamma")),
                kappa=optional_int(data.get("kappa")),
                bound=int(data["bound"]),
                conjecture=str(data["conjecture"]),
                reed_bound=int(data["reed_bound"]),
                verdict=Verdict(str(data["verdict"])),
                reed_verdict=Verdict(str(data["reed_verdict"])),
                status=str(data.get("status", "optimal")),
                notes=list(notes) if isinstance(notes, list) else [],
            )
        except (KeyError, ValueError, TypeError) as e:
            logging.error(f"Invalid scan record: {e}")
            raise ReportError(f"Invalid scan record data: {e}")
