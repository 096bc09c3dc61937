"""
Record models and their JSON schemas.
"""

from .records import (
    TraceRecord,
    OracleRecord,
    ClassNumberRecord,
    OrbitalRecord,
    SuiteReport,
    VerificationReport,
    RECORD_MODELS,
)
from .schema import RecordValidator, validate_record

__all__ = [
    "TraceRecord",
    "OracleRecord",
    "ClassNumberRecord",
    "OrbitalRecord",
    "SuiteReport",
    "VerificationReport",
    "RECORD_MODELS",
    "RecordValidator",
    "validate_record",
]
