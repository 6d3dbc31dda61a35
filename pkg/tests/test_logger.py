# ----------------------------------------------------------
# Domination Lab
# File: tests/test_logger.py
# ----------------------------------------------------------
# Description:
# Unit tests for domlab/logger.py
# Verifies:
# - Logger initialization and log file setup.
# - INFO, WARNING and ERROR helpers reach the "domlab" logger.
# - The configured level is applied.
# ----------------------------------------------------------

import logging

from domlab.lab_config import LabConfig
from domlab.logger import Logger


def test_logger_initialization(tmp_path):
    config = LabConfig(base_dir=tmp_path)
    logger = Logger(config)
    logger.log_info("Test info message")
    logger.log_error("Test error message")

    assert config.log_dir.exists()
    for handler in logging.getLogger().handlers:
        handler.flush()
    text = config.log_file.read_text(encoding="utf-8")
    assert "Logger initialized successfully." in text
    assert "ERROR - Test error message" in text


def test_logger_helpers_call_logging(monkeypatch, tmp_path):
    logger = Logger(LabConfig(base_dir=tmp_path))
    called = []
    monkeypatch.setattr(logger.logger, "info", lambda msg: called.append(("info", msg)))
    monkeypatch.setattr(logger.logger, "warning", lambda msg: called.append(("warning", msg)))
    monkeypatch.setattr(logger.logger, "error", lambda msg: called.append(("error", msg)))

    logger.log_info("hello")
    logger.log_warning("careful")
    logger.log_error("oops")
    assert called == [("info", "hello"), ("warning", "careful"), ("error", "oops")]


def test_logger_uses_configured_level(monkeypatch, tmp_path):
    monkeypatch.setenv("DOMLAB_LOG_LEVEL", "warning")
    logger = Logger(LabConfig(base_dir=tmp_path))
    assert logger.logger.name == "domlab"
    assert logger.logger.level == logging.WARNING


def test_unknown_level_falls_back_to_info(monkeypatch, tmp_path):
    monkeypatch.setenv("DOMLAB_LOG_LEVEL", "chatty")
    assert Logger(LabConfig(base_dir=tmp_path)).logger.level == logging.INFO
