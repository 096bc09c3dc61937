"""
Custom exception classes for the sigma-trace engine.

Provides structured error handling with specific exception types for different error categories.
"""


class TraceEngineError(Exception):
    """Base exception for all sigma-trace errors."""

    def __init__(self, message: str, details: dict = None):
        """
        Initialize exception.

        Args:
            message: Error message
            details: Additional error details (optional)
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self):
        if self.details:
            return f"{self.message} | Details: {self.details}"
        return self.message


class ConfigurationError(TraceEngineError):
    """Configuration-related errors (out-of-range settings, unknown output mode, etc.)."""
    pass


class DomainError(TraceEngineError):
    """A precondition on the input domain is violated (k odd, m < 1, d not squarefree, etc.)."""
    pass


class FieldMismatchError(DomainError):
    """Two quadratic-field elements with different d were combined."""
    pass


class AlgebraicityError(DomainError):
    """The parity condition k_v = w (mod 2) is violated."""
    pass


class DegenerateInputError(DomainError):
    """Parabolic input (t^2 = 4n at some embedding); orbital integrals are undefined there."""
    pass


class ParseError(DomainError):
    """Text does not match the rational / quadratic-element grammar."""
    pass


class DivisionByZeroError(TraceEngineError, ZeroDivisionError):
    """Exact division by zero."""
    pass


class ExactnessError(TraceEngineError):
    """A floating-point value reached the exact arithmetic path."""
    pass


class PrecisionError(TraceEngineError):
    """A q-series was read beyond its precision, or a coordinate solve was singular."""
    pass


class UnsupportedScopeError(TraceEngineError):
    """Input is well-formed but outside the computable scope (k = 2, dim >= 3, ...)."""
    pass


class VerificationError(TraceEngineError):
    """Engine and oracle (or a verification suite) disagree."""
    pass
