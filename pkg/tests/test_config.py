# ----------------------------------------------------------
# Domination Lab
# File: tests/test_config.py
# ----------------------------------------------------------
# Description:
# This test module validates the LabConfig class from
# `domlab/lab_config.py`, ensuring correct environment-based
# configuration management, directory setup, and validation.
#
# Test Coverage Includes:
#   - Environment variable loading (DOMLAB_*)
#   - Manual overrides in the constructor
#   - Directory and file path resolution
#   - Auto-save boolean conversions
#   - Validation of budgets, caps and worker counts
#   - Fallback defaults when environment variables are absent
#   - Validation of invalid encoding
#   - Repr coverage
# ----------------------------------------------------------

from pathlib import Path

import pytest

from domlab.exceptions import ConfigError
from domlab.lab_config import MAX_BRUTEFORCE_CAP, LabConfig, get_project_root


# ----------------------------------------------------------
# Environment Loading
# ----------------------------------------------------------
def test_configuration_loads_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("DOMLAB_CLAIM_BUDGET", "12.5")
    monkeypatch.setenv("DOMLAB_GLOBAL_BUDGET", "99")
    monkeypatch.setenv("DOMLAB_HAMILTON_BUDGET", "5000")
    monkeypatch.setenv("DOMLAB_BRUTEFORCE_CAP", "20")
    monkeypatch.setenv("DOMLAB_WORKERS", "4")
    monkeypatch.setenv("DOMLAB_DEFAULT_ENCODING", "ascii")
    monkeypatch.setenv("DOMLAB_LOG_DIR", str(tmp_path / "custom_logs"))
    config = LabConfig(base_dir=tmp_path)
    assert config.claim_budget == 12.5
    assert config.global_budget == 99.0
    assert config.hamilton_budget == 5000
    assert config.bruteforce_cap == 20
    assert config.workers == 4
    assert config.default_encoding == "ascii"
    assert config.log_dir == (tmp_path / "custom_logs").resolve()
    assert config.log_file == (tmp_path / "custom_logs" / "domlab.log").resolve()


def test_manual_overrides_take_precedence(monkeypatch):
    monkeypatch.setenv("DOMLAB_CLAIM_BUDGET", "12.5")
    monkeypatch.setenv("DOMLAB_WORKERS", "4")
    config = LabConfig(claim_budget=3, workers=2, auto_save=True, default_encoding="utf-16")
    assert config.claim_budget == 3.0
    assert config.workers == 2
    assert config.auto_save is True
    assert config.default_encoding == "utf-16"


def test_defaults_apply_when_env_missing():
    config = LabConfig()
    assert config.claim_budget == 300.0
    assert config.global_budget == 1800.0
    assert config.hamilton_budget == 100_000_000
    assert config.bruteforce_cap == MAX_BRUTEFORCE_CAP
    assert config.workers == 1
    assert config.auto_save is False
    assert config.default_encoding == "utf-8"
    assert config.log_level == "INFO"
    assert config.base_dir == get_project_root()


# ----------------------------------------------------------
# Directory and File Resolution
# ----------------------------------------------------------
def test_paths_default_under_base_dir():
    config = LabConfig(base_dir=Path("/custom_base_dir"))
    assert config.log_dir == Path("/custom_base_dir/logs").resolve()
    assert config.report_dir == Path("/custom_base_dir/reports").resolve()
    assert config.log_file == Path("/custom_base_dir/logs/domlab.log").resolve()
    assert config.report_file == Path("/custom_base_dir/reports/claims.json").resolve()


def test_report_file_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("DOMLAB_REPORT_FILE", str(tmp_path / "r.csv"))
    assert LabConfig(base_dir=tmp_path).report_file == (tmp_path / "r.csv").resolve()


def test_log_level_is_upper_cased(monkeypatch):
    monkeypatch.setenv("DOMLAB_LOG_LEVEL", "debug")
    assert LabConfig().log_level == "DEBUG"


# ----------------------------------------------------------
# Boolean Conversion Tests (auto_save)
# ----------------------------------------------------------
@pytest.mark.parametrize("env_value, expected", [
    ("true", True),
    ("1", True),
    ("yes", True),
    ("false", False),
    ("0", False),
])
def test_auto_save_boolean_conversion(monkeypatch, env_value, expected):
    monkeypatch.setenv("DOMLAB_AUTO_SAVE", env_value)
    assert LabConfig(auto_save=None).auto_save is expected


# ----------------------------------------------------------
# Validation Tests
# ----------------------------------------------------------
@pytest.mark.parametrize("overrides, message", [
    ({"claim_budget": 0}, "claim_budget must be positive"),
    ({"global_budget": -1}, "global_budget must be positive"),
    ({"hamilton_budget": 0}, "hamilton_budget must be positive"),
    ({"bruteforce_cap": 0}, "bruteforce_cap must be in"),
    ({"bruteforce_cap": MAX_BRUTEFORCE_CAP + 1}, "bruteforce_cap must be in"),
    ({"workers": 0}, "workers must be at least 1"),
])
def test_invalid_values_raise(tmp_path, overrides, message):
    config = LabConfig(base_dir=tmp_path, **overrides)
    with pytest.raises(ConfigError, match=message):
        config.validate()


def test_validate_creates_directories(tmp_path):
    config = LabConfig(base_dir=tmp_path)
    config.validate()
    assert config.log_dir.is_dir()
    assert config.report_dir.is_dir()


def test_invalid_encoding_raises_configerror(tmp_path):
    config = LabConfig(base_dir=tmp_path, default_encoding="fake-encoding")
    with pytest.raises(ConfigError, match="Unsupported encoding"):
        config.validate()


# ----------------------------------------------------------
# Utility and Repr
# ----------------------------------------------------------
def test_get_project_root_points_to_parent():
    root_path = get_project_root()
    assert root_path.exists()
    assert (root_path / "domlab").is_dir()


def test_repr_includes_key_fields():
    rep = repr(LabConfig())
    assert rep.startswith("LabConfig(")
    assert "claim_budget" in rep
    assert "workers" in rep
