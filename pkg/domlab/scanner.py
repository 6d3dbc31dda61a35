# ----------------------------------------------------------
# Domination Lab
# File: domlab/scanner.py
# ----------------------------------------------------------
# Description:
# Conjecture corpus scanner. Streams a graph6 corpus (produced by an
# external generator), filters it by cubicity and vertex
# connectivity, solves gamma exactly under a budget and checks each
# graph against one of two upper bounds:
#
#   reed     → gamma(G) <= ceil(n/3)
#   kelmans  → ceil(n/3) when n != 1 mod 3, floor(n/3) when n = 1 mod 3
#
# A bad line is reported and skipped; the scan continues.
# ----------------------------------------------------------

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from domlab.analysis import is_cubic, vertex_connectivity
from domlab.domination import gamma_exact
from domlab.exceptions import ValidationError
from domlab.graph6 import read_graph6_file
from domlab.records import ScanRecord, Verdict

CONJECTURES = ("kelmans", "reed")


def reed_bound(n: int) -> int:
    return math.ceil(n / 3)


def kelmans_bound(n: int) -> int:
    return n // 3 if n % 3 == 1 else math.ceil(n / 3)


def conjecture_bound(conjecture: str, n: int) -> int:
    if conjecture == "reed":
        return reed_bound(n)
    if conjecture == "kelmans":
        return kelmans_bound(n)
    raise ValidationError(f"Unknown conjecture: {conjecture}. Use one of {', '.join(CONJECTURES)}")


def _verdict(gamma: Optional[int], bound: int) -> Verdict:
    if gamma is None:
        return Verdict.INCONCLUSIVE
    return Verdict.HOLDS if gamma <= bound else Verdict.VIOLATED


@dataclass
class ScanSummary:
    scanned: int = 0
    filtered: int = 0
    holds: int = 0
    violated: int = 0
    inconclusive: int = 0
    parse_errors: int = 0

    def to_dict(self) -> Dict[str, int]:
        return dict(vars(self))


@dataclass
class ScanResult:
    records: List[ScanRecord] = field(default_factory=list)
    summary: ScanSummary = field(default_factory=ScanSummary)
    errors: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def violations(self) -> List[ScanRecord]:
        return [r for r in self.records if r.violated]


def scan_corpus(path: Union[str, Path], conjecture: str = "reed",
                kappa_min: Optional[int] = None, cubic_only: bool = True,
                budget: Optional[float] = None, encoding: str = "ascii") -> ScanResult:
    """
    Check every graph of a graph6 corpus against the selected bound.

    Graphs failing the cubic / kappa_min filters are counted but not
    recorded. A gamma solve that runs out of budget gives an
    inconclusive record, never a violation.
    """
    conjecture = conjecture.lower()
    if conjecture not in CONJECTURES:
        raise ValidationError(f"Unknown conjecture: {conjecture}. Use one of {', '.join(CONJECTURES)}")
    if not Path(path).is_file():
        raise ValidationError(f"Corpus file not found: {path}")

    result = ScanResult()
    summary = result.summary
    for line in read_graph6_file(path, encoding):
        if line.graph is None:
            summary.parse_errors += 1
            result.errors.append({"line_number": line.line_number, "text": line.text,
                                  "error": str(line.error)})
            continue
        g = line.graph
        summary.scanned += 1
        if cubic_only and not is_cubic(g):
            summary.filtered += 1
            continue
        kappa = vertex_connectivity(g)
        if kappa_min is not None and kappa < kappa_min:
            summary.filtered += 1
            continue

        solved = gamma_exact(g, budget)
        gamma = solved.gamma if solved.optimal else None
        bound = conjecture_bound(conjecture, g.n)
        record = ScanRecord(line.line_number, line.text, g.n, gamma, kappa, bound, conjecture,
                            reed_bound(g.n), _verdict(gamma, bound),
                            _verdict(gamma, reed_bound(g.n)), solved.status.value)
        if record.verdict is Verdict.VIOLATED:
            summary.violated += 1
            record.notes.append(f"witness {list(solved.witness)}")
            logging.warning(f"Violation of {conjecture} bound on line {line.line_number}: "
                            f"gamma={gamma} > {bound} ({line.text})")
        elif record.verdict is Verdict.INCONCLUSIVE:
            summary.inconclusive += 1
            record.notes.append(f"{solved.lower_bound} <= gamma <= {solved.upper_bound}")
        else:
            summary.holds += 1
        result.records.append(record)

    logging.info(f"Scanned {path}: {summary.to_dict()}")
    return result
