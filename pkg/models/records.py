"""
Pydantic record models for every result the CLI emits.

Exact values travel as strings ("p/q", "p" or "a+b*sqrt(d)") so that no
rational is ever rendered as a decimal.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

RATIONAL_PATTERN = r"^-?\d+(/\d+)?$"
SCALAR_PATTERN = r"^-?\d+(/\d+)?([+-]\d+(/\d+)?\*sqrt\(-?\d+\))?$"


class TraceRecord(BaseModel):
    """One (k, m) trace breakdown."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "kind": "trace", "k": 12, "m": 2,
                "identity": "0", "elliptic": "-23", "hyperbolic": "-1", "total": "-24",
            }
        }
    )

    kind: str = Field("trace", description="Record kind")
    k: int = Field(..., ge=4, description="Even weight")
    m: int = Field(..., ge=1, description="Hecke index")
    identity: str = Field(..., pattern=RATIONAL_PATTERN, description="Identity distribution")
    elliptic: str = Field(..., pattern=RATIONAL_PATTERN, description="Elliptic distribution")
    hyperbolic: str = Field(..., pattern=RATIONAL_PATTERN, description="Hyperbolic correction")
    total: str = Field(..., pattern=RATIONAL_PATTERN, description="Trace of T_m on S_k")


class OracleRecord(BaseModel):
    """Spectral-side data for one (k, m)."""

    kind: str = Field("oracle", description="Record kind")
    k: int = Field(..., ge=4)
    m: int = Field(..., ge=1)
    dimension: int = Field(..., ge=0, description="dim S_k(SL2(Z))")
    trace: str = Field(..., pattern=RATIONAL_PATTERN)
    matrix: Optional[List[List[str]]] = Field(None, description="Hecke matrix rows, when requested")
    charpoly: Optional[List[int]] = Field(None, description="det(xI - T_m), leading coefficient first")


class ClassNumberRecord(BaseModel):
    kind: str = Field("classnum", description="Record kind")
    n: int = Field(..., ge=0)
    hurwitz: str = Field(..., pattern=RATIONAL_PATTERN)
    form_count: int = Field(..., ge=0)
    forms: Optional[List[str]] = Field(None, description="Reduced forms (a,b,c), when requested")


class OrbitalRecord(BaseModel):
    """An archimedean orbital integral with its weight-conjugated partner."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "kind": "orbital", "d": 1, "gamma": ["0", "-1", "1", "0"], "k": [12], "w": 10,
                "per_embedding": ["elliptic_positive"], "aggregate": "totally_elliptic_positive",
                "value": "2", "conjugate_value": None, "equivariant": None,
            }
        }
    )

    kind: str = Field("orbital", description="Record kind")
    d: int = Field(..., description="Field seed; 1 denotes Q")
    gamma: List[str] = Field(..., min_length=4, max_length=4)
    k: List[int] = Field(..., min_length=1, max_length=2)
    w: int
    per_embedding: List[str]
    aggregate: str
    value: str = Field(..., pattern=SCALAR_PATTERN)
    conjugate_value: Optional[str] = Field(None, pattern=SCALAR_PATTERN)
    equivariant: Optional[bool] = None


class SuiteReport(BaseModel):
    """Outcome of an equivariance suite."""

    kind: str = Field("suite", description="Record kind")
    suite: str
    passed: bool
    checked: int = Field(..., ge=0, description="Number of individual checks performed")
    failures: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    """Engine-versus-oracle comparison over a (k, m) grid."""

    kind: str = Field("verify", description="Record kind")
    k_min: int
    k_max: int
    m_max: int
    checked: int = Field(..., ge=0)
    passed: bool
    first_mismatch: Optional[Dict[str, Any]] = Field(None, description="k, m, engine, oracle of the first failure")


RECORD_MODELS = {
    "trace": TraceRecord,
    "oracle": OracleRecord,
    "classnum": ClassNumberRecord,
    "orbital": OrbitalRecord,
    "suite": SuiteReport,
    "verify": VerificationReport,
}
