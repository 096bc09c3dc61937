"""
Tests for configuration validation, logging and the exception hierarchy.
"""

import json
import logging

import pytest

import config
from utils.exceptions import (
    AlgebraicityError,
    ConfigurationError,
    DivisionByZeroError,
    DomainError,
    FieldMismatchError,
    TraceEngineError,
)
from utils.logger import JSONFormatter, ROOT_LOGGER_NAME, get_logger, setup_logging


class TestValidateConfig:
    """Test range checks on configuration constants."""

    def test_defaults_valid(self):
        """Test the shipped defaults pass."""
        config.validate_config()

    def test_unknown_output_mode(self, monkeypatch):
        """Test an unknown output mode is refused."""
        monkeypatch.setattr(config, "OUTPUT_MODE", "xml")
        with pytest.raises(ConfigurationError) as exc_info:
            config.validate_config()
        assert exc_info.value.details == {"OUTPUT_MODE": "xml"}

    def test_grid_bounds(self, monkeypatch):
        """Test the verification grid and worker settings."""
        monkeypatch.setattr(config, "VERIFY_K_MIN", 2)
        with pytest.raises(ConfigurationError):
            config.validate_config()
        monkeypatch.setattr(config, "VERIFY_K_MIN", 4)
        monkeypatch.setattr(config, "VERIFY_WORKERS", 0)
        with pytest.raises(ConfigurationError):
            config.validate_config()


class TestLogger:
    """Test the sigma_trace logger hierarchy."""

    def test_names(self):
        """Test module loggers hang under the package root."""
        assert get_logger("oracle.hecke").name == f"{ROOT_LOGGER_NAME}.oracle.hecke"
        assert get_logger("__main__").name == f"{ROOT_LOGGER_NAME}.main"
        assert get_logger(f"{ROOT_LOGGER_NAME}.galois").name == f"{ROOT_LOGGER_NAME}.galois"
        assert get_logger().name == ROOT_LOGGER_NAME

    def test_setup_is_idempotent(self):
        """Test repeated setup keeps one set of handlers."""
        setup_logging()
        count = len(logging.getLogger(ROOT_LOGGER_NAME).handlers)
        setup_logging()
        assert len(logging.getLogger(ROOT_LOGGER_NAME).handlers) == count

    def test_json_extra_fields(self):
        """Test fields passed through extra appear as JSON keys."""
        record = logging.LogRecord("sigma_trace.tfengine", logging.INFO, __file__, 1, "Grid evaluated", (), None)
        record.pairs = 420
        payload = json.loads(JSONFormatter().format(record))
        assert payload["message"] == "Grid evaluated"
        assert payload["level"] == "INFO"
        assert payload["pairs"] == 420


class TestExceptions:
    """Test the exception hierarchy."""

    def test_details_in_str(self):
        """Test details are appended to the message."""
        error = TraceEngineError("bad weight", details={"k": 5})
        assert str(error) == "bad weight | Details: {'k': 5}"
        assert str(TraceEngineError("plain")) == "plain"

    def test_hierarchy(self):
        """Test domain subclasses and the ZeroDivisionError bridge."""
        assert issubclass(FieldMismatchError, DomainError)
        assert issubclass(AlgebraicityError, DomainError)
        assert issubclass(DivisionByZeroError, ZeroDivisionError)
        assert issubclass(DivisionByZeroError, TraceEngineError)
