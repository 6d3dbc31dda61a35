# ----------------------------------------------------------
# Domination Lab
# File: domlab/logger.py
# ----------------------------------------------------------
# Description:
# Centralized logging setup for the domination lab. Reads the
# log file location and level from LabConfig (and therefore from
# .env), and offers small helpers used by the CLI and verifier.
# ----------------------------------------------------------

import logging
from typing import Optional

from domlab.lab_config import LabConfig

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class Logger:
    """Handles logging setup and provides methods for info and error messages."""
    def __init__(self, config: Optional[LabConfig] = None):
        self.config = config or LabConfig()
        self.config.log_dir.mkdir(parents=True, exist_ok=True)

        # ------------------------------------------------------
        # Basic Logging Configuration
        # ------------------------------------------------------
        logging.basicConfig(
            filename=str(self.config.log_file),
            level=logging.INFO,
            format=LOG_FORMAT,
            datefmt=DATE_FORMAT,
            force=True,
        )

        self.logger = logging.getLogger("domlab")
        self.logger.setLevel(getattr(logging, self.config.log_level, logging.INFO))

        self.logger.info("Logger initialized successfully.")

    def log_info(self, message: str) -> None:
        """Log informational messages."""
        self.logger.info(message)

    def log_warning(self, message: str) -> None:
        """Log warnings (inconclusive claims, skipped corpus lines)."""
        self.logger.warning(message)

    def log_error(self, message: str) -> None:
        """Log error messages."""
        self.logger.error(message)
