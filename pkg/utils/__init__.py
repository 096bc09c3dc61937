"""
Utility modules for the sigma-trace engine.

Provides logging and the exception hierarchy shared by every package.
"""

from .logger import get_logger, setup_logging
from .exceptions import (
    TraceEngineError,
    ConfigurationError,
    DomainError,
    FieldMismatchError,
    AlgebraicityError,
    DegenerateInputError,
    ParseError,
    DivisionByZeroError,
    ExactnessError,
    PrecisionError,
    UnsupportedScopeError,
    VerificationError,
)

__all__ = [
    "get_logger",
    "setup_logging",
    "TraceEngineError",
    "ConfigurationError",
    "DomainError",
    "FieldMismatchError",
    "AlgebraicityError",
    "DegenerateInputError",
    "ParseError",
    "DivisionByZeroError",
    "ExactnessError",
    "PrecisionError",
    "UnsupportedScopeError",
    "VerificationError",
]
