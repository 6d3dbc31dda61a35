# ----------------------------------------------------------
# Domination Lab
# File: domlab/verifier.py
# ----------------------------------------------------------
# Description:
# The Verifier class is the controller behind `domlab verify`:
#   • validates configuration and prepares log/report directories
#   • runs the selected claims through the claim registry
#   • notifies observers (logging, auto-save) after every claim
#   • keeps the ReportLog and writes the final report
#   • maps the outcome to the process exit code
# ----------------------------------------------------------

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

from domlab.claims import verify_claims
from domlab.exceptions import ReportError
from domlab.lab_config import LabConfig
from domlab.logger import Logger
from domlab.records import ClaimReport, ClaimStatus
from domlab.reporting import AutoSaveObserver, LoggingObserver, ReportLog, ReportObserver

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


def exit_code(reports: Iterable[ClaimReport]) -> int:
    """0 all pass, 1 any fail, 2 any inconclusive and none failed."""
    statuses = {report.status for report in reports}
    if ClaimStatus.FAIL in statuses:
        return EXIT_FAIL
    if ClaimStatus.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


class Verifier:
    """Claim verification controller (Observer pattern for logging and auto-save)."""

    def __init__(self, config: Optional[LabConfig] = None,
                 report_file: Optional[Union[str, Path]] = None, fmt: str = "json"):
        self.config = config or LabConfig()
        self.config.validate()
        self.logger = Logger(self.config)

        self.report_log = ReportLog(report_file or self.config.report_file, fmt,
                                    self.config.default_encoding)
        self.observers: List[ReportObserver] = [LoggingObserver(), AutoSaveObserver(self)]
        logging.info(f"Verifier initialized with {self.config!r}")

    # ------------------------------------------------------
    # Observers
    # ------------------------------------------------------
    def add_observer(self, observer: ReportObserver) -> None:
        self.observers.append(observer)

    def remove_observer(self, observer: ReportObserver) -> None:
        if observer in self.observers:
            self.observers.remove(observer)

    def _notify_observers(self, report: ClaimReport) -> None:
        for observer in self.observers:
            try:
                observer.update(report)
            except Exception as e:
                logging.error(f"Observer {type(observer).__name__} failed: {e}")

    def _record(self, report: ClaimReport) -> None:
        self.report_log.append(report)
        self._notify_observers(report)

    # ------------------------------------------------------
    # Running Claims
    # ------------------------------------------------------
    def run(self, selection: Union[str, Iterable[str], None] = "all",
            budget: Optional[float] = None) -> List[ClaimReport]:
        """Run the selection; reports are appended as they finish."""
        self.report_log.clear()
        reports = verify_claims(selection, budget, self.config, on_report=self._record)
        # ReportLog keeps selection order even when a pool finishes out of order
        self.report_log.records = list(reports)
        counts = self.report_log.counts()
        logging.info(
            f"Verification finished: {counts['pass']} pass, {counts['fail']} fail, "
            f"{counts['inconclusive']} inconclusive"
        )
        return reports

    def save_report(self) -> Path:
        try:
            return self.report_log.save()
        except ReportError:
            raise
        except Exception as e:
            raise ReportError(f"Failed to save report: {e}") from e

    def exit_code(self) -> int:
        return exit_code(self.report_log.records)
