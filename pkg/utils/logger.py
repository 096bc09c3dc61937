"""
Logging for sigma-trace.

Every module logs through a child of the `sigma_trace` logger. Handlers are
attached once to that root: a stderr stream (stdout is reserved for rendered
results) and, when enabled, a size-rotated file. Both use either a text or a
JSON layout; in JSON, fields passed with `extra=` become top-level keys.
"""

import json
import logging
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from typing import Optional

from config import (
    LOG_CONSOLE_ENABLED,
    LOG_CONSOLE_FORMAT,
    LOG_FILE_BACKUP_COUNT,
    LOG_FILE_ENABLED,
    LOG_FILE_FORMAT,
    LOG_FILE_MAX_SIZE_MB,
    LOG_FILE_PATH,
    LOG_LEVEL,
    LOG_LEVELS,
)

ROOT_LOGGER_NAME = "sigma_trace"
TEXT_LAYOUT = "[%(asctime)s] [%(levelname)s] [%(name)s] - %(message)s"

_STANDARD_FIELDS = frozenset(vars(logging.makeLogRecord({}))) | {"message", "asctime"}


class JSONFormatter(logging.Formatter):
    """One JSON object per record."""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "module": record.name,
            "message": record.getMessage(),
        }
        payload.update(
            (key, value) for key, value in vars(record).items()
            if key not in _STANDARD_FIELDS and not key.startswith("_")
        )
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=str)


def _formatter(layout: str) -> logging.Formatter:
    if layout == "json":
        return JSONFormatter()
    return logging.Formatter(TEXT_LAYOUT, datefmt="%Y-%m-%d %H:%M:%S")


def _level(name: str) -> int:
    return logging.getLevelName(name.upper())


def _console_handler() -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(_formatter(LOG_CONSOLE_FORMAT))
    return handler


def _file_handler() -> logging.Handler:
    path = LOG_FILE_PATH / f"{ROOT_LOGGER_NAME}_{datetime.now():%Y-%m-%d}.log"
    handler = RotatingFileHandler(
        path,
        maxBytes=LOG_FILE_MAX_SIZE_MB * 1024 * 1024,
        backupCount=LOG_FILE_BACKUP_COUNT,
        encoding="utf-8",
    )
    handler.setFormatter(_formatter(LOG_FILE_FORMAT))
    return handler


def setup_logging() -> None:
    """
    (Re)attach the configured handlers to the `sigma_trace` logger and apply
    the per-package levels from config. Calling it twice does not duplicate output.
    """
    root = logging.getLogger(ROOT_LOGGER_NAME)
    root.handlers.clear()
    root.propagate = False

    handlers = []
    if LOG_CONSOLE_ENABLED:
        handlers.append(_console_handler())
    if LOG_FILE_ENABLED:
        handlers.append(_file_handler())
    for handler in handlers:
        handler.setLevel(_level(LOG_LEVEL))
        root.addHandler(handler)
    if not handlers:
        root.addHandler(logging.NullHandler())

    for name, level in LOG_LEVELS.items():
        logging.getLogger(name).setLevel(_level(level))


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Logger under the `sigma_trace` hierarchy.

    Args:
        name: Usually __name__; "oracle.hecke" becomes "sigma_trace.oracle.hecke".
            None returns the package root.

    Example:
        logger = get_logger(__name__)
        logger.info("Grid evaluated", extra={"pairs": 420})
    """
    if not logging.getLogger(ROOT_LOGGER_NAME).handlers:
        setup_logging()
    if name is None:
        return logging.getLogger(ROOT_LOGGER_NAME)
    if name in ("__main__", "main"):
        name = "main"
    if name != ROOT_LOGGER_NAME and not name.startswith(ROOT_LOGGER_NAME + "."):
        name = f"{ROOT_LOGGER_NAME}.{name}"
    return logging.getLogger(name)


setup_logging()
