# ----------------------------------------------------------
# Domination Lab
# File: domlab/lab_config.py
# ----------------------------------------------------------
# Description:
# Defines the LabConfig dataclass that manages all configuration
# parameters for the domination lab.
# Features:
#   • Loads settings from .env using python-dotenv
#   • Provides safe defaults when environment variables are missing
#   • Allows constructor arguments to override environment variables
#   • Validates budgets, caps, worker counts and directories
# ----------------------------------------------------------

from dataclasses import dataclass
from pathlib import Path
import os
from typing import Optional
from dotenv import load_dotenv

from domlab.exceptions import ConfigError

# ----------------------------------------------------------
# Load environment variables from .env (if present)
# ----------------------------------------------------------
load_dotenv()

# Largest graph the subset-enumeration oracle accepts.
MAX_BRUTEFORCE_CAP = 26


def get_project_root() -> Path:
    """Return the project root directory path."""
    return Path(__file__).resolve().parent.parent


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("true", "1", "yes")


# ----------------------------------------------------------
# Lab Configuration Class
# ----------------------------------------------------------
@dataclass
class LabConfig:
    """
    Manages configuration for the domination lab.

    Loads environment variables via python-dotenv and provides
    defaults for missing values. Constructor arguments always
    override environment values.
    """

    base_dir: Optional[Path] = None
    claim_budget: Optional[float] = None
    global_budget: Optional[float] = None
    hamilton_budget: Optional[int] = None
    bruteforce_cap: Optional[int] = None
    workers: Optional[int] = None
    auto_save: Optional[bool] = None
    default_encoding: Optional[str] = None

    def __init__(
        self,
        base_dir: Optional[Path] = None,
        claim_budget: Optional[float] = None,
        global_budget: Optional[float] = None,
        hamilton_budget: Optional[int] = None,
        bruteforce_cap: Optional[int] = None,
        workers: Optional[int] = None,
        auto_save: Optional[bool] = None,
        default_encoding: Optional[str] = None,
    ):
        project_root = get_project_root()
        self.base_dir = Path(base_dir or os.getenv("DOMLAB_BASE_DIR", str(project_root))).resolve()

        # -------------------------------
        # Search Budgets
        # -------------------------------
        self.claim_budget = float(
            claim_budget if claim_budget is not None
            else os.getenv("DOMLAB_CLAIM_BUDGET", "300")
        )
        self.global_budget = float(
            global_budget if global_budget is not None
            else os.getenv("DOMLAB_GLOBAL_BUDGET", "1800")
        )
        self.hamilton_budget = int(
            hamilton_budget if hamilton_budget is not None
            else os.getenv("DOMLAB_HAMILTON_BUDGET", "100000000")
        )
        self.bruteforce_cap = int(
            bruteforce_cap if bruteforce_cap is not None
            else os.getenv("DOMLAB_BRUTEFORCE_CAP", str(MAX_BRUTEFORCE_CAP))
        )

        # -------------------------------
        # Execution and Persistence
        # -------------------------------
        self.workers = int(
            workers if workers is not None
            else os.getenv("DOMLAB_WORKERS", "1")
        )

        if auto_save is not None:
            self.auto_save = bool(auto_save)
        else:
            self.auto_save = _env_bool("DOMLAB_AUTO_SAVE", "false")

        self.default_encoding = (
            default_encoding
            if default_encoding is not None
            else os.getenv("DOMLAB_DEFAULT_ENCODING", "utf-8")
        )

    # ------------------------------------------------------
    # Directory and File Path Properties
    # ------------------------------------------------------
    @property
    def log_dir(self) -> Path:
        """Return the directory for log files."""
        return Path(os.getenv("DOMLAB_LOG_DIR", str(self.base_dir / "logs"))).resolve()

    @property
    def report_dir(self) -> Path:
        """Return the directory for claim and scan reports."""
        return Path(os.getenv("DOMLAB_REPORT_DIR", str(self.base_dir / "reports"))).resolve()

    @property
    def log_file(self) -> Path:
        """Return the path to the lab log file."""
        return Path(os.getenv("DOMLAB_LOG_FILE", str(self.log_dir / "domlab.log"))).resolve()

    @property
    def report_file(self) -> Path:
        """Return the default claim report path."""
        return Path(
            os.getenv("DOMLAB_REPORT_FILE", str(self.report_dir / "claims.json"))
        ).resolve()

    @property
    def log_level(self) -> str:
        """Return the configured log level name."""
        return os.getenv("DOMLAB_LOG_LEVEL", "INFO").upper()

    # ------------------------------------------------------
    # Validation
    # ------------------------------------------------------
    def validate(self) -> None:
        """Validate all configuration parameters."""
        if self.claim_budget <= 0:
            raise ConfigError("claim_budget must be positive")
        if self.global_budget <= 0:
            raise ConfigError("global_budget must be positive")
        if self.hamilton_budget <= 0:
            raise ConfigError("hamilton_budget must be positive")
        if not 0 < self.bruteforce_cap <= MAX_BRUTEFORCE_CAP:
            raise ConfigError(f"bruteforce_cap must be in 1..{MAX_BRUTEFORCE_CAP}")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")

        for directory in [self.log_dir, self.report_dir]:
            directory.mkdir(parents=True, exist_ok=True)

        try:
            "".encode(self.default_encoding)
        except LookupError:
            raise ConfigError(f"Unsupported encoding: {self.default_encoding}")

    def __repr__(self):
        return (
            f"LabConfig("
            f"log_dir={self.log_dir}, "
            f"report_dir={self.report_dir}, "
            f"claim_budget={self.claim_budget}, "
            f"global_budget={self.global_budget}, "
            f"hamilton_budget={self.hamilton_budget}, "
            f"bruteforce_cap={self.bruteforce_cap}, "
            f"workers={self.workers}, "
            f"auto_save={self.auto_save}, "
            f"default_encoding='{self.default_encoding}')"
        )
