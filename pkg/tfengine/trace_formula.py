"""
Geometric side of the trace formula for T_m on S_k(SL2(Z)).

The trace splits into the identity distribution, the elliptic distribution
(one class per integer t with t^2 < 4m, weighted by H(4m - t^2) and by the
archimedean character of L_{k-2}) and the hyperbolic correction. All three
are exact rationals; their sum is an integer.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from sympy import divisors

from chars import WeightVector, sym_char
from classnum import H_ZERO, hurwitz
from exact import format_rational, is_perfect_square, to_rational
from models import TraceRecord
from orbital import arch_orbital, companion
from utils.exceptions import DomainError, ExactnessError, UnsupportedScopeError


@dataclass(frozen=True)
class HeckeDatum:
    """The Hecke operator T_m as a Q-valued test function."""

    m: int
    value_field: str = "rational"

    def __post_init__(self):
        _require_index(self.m)
        if self.value_field != "rational":
            raise UnsupportedScopeError(
                "Only rational-valued Hecke data are supported",
                details={"value_field": self.value_field}
            )

    def __str__(self) -> str:
        return f"T_{self.m}"


@dataclass(frozen=True)
class TraceBreakdown:
    k: int
    m: int
    identity: Fraction
    elliptic: Fraction
    hyperbolic: Fraction
    total: Fraction

    def __post_init__(self):
        for name in ("identity", "elliptic", "hyperbolic", "total"):
            if not isinstance(getattr(self, name), Fraction):
                raise ExactnessError(
                    f"Breakdown field {name} is not an exact rational",
                    details={"k": self.k, "m": self.m, "type": type(getattr(self, name)).__name__}
                )
        if self.total != self.identity + self.elliptic + self.hyperbolic:
            raise DomainError("total must equal identity + elliptic + hyperbolic", details={"k": self.k, "m": self.m})
        if self.identity and not is_perfect_square(self.m):
            raise DomainError("Identity term is non-zero only for square m", details={"m": self.m})

    def terms(self):
        return {
            "identity": self.identity,
            "elliptic": self.elliptic,
            "hyperbolic": self.hyperbolic,
            "total": self.total,
        }

    def to_record(self) -> TraceRecord:
        return TraceRecord(
            k=self.k,
            m=self.m,
            **{name: format_rational(value) for name, value in self.terms().items()},
        )


def _require_index(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"Hecke index must be a positive integer, got {m!r}")


def _require_weight(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise DomainError(f"Weight must be an integer, got {k!r}")
    if k == 2:
        raise UnsupportedScopeError(
            "Weight 2 needs residual-spectrum corrections and is not supported",
            details={"k": k}
        )
    if k % 2 or k < 4:
        raise DomainError("Weight must be even and >= 4 (parity, k = w mod 2 with w = 0)", details={"k": k})


def _check(k: int, m: int) -> None:
    _require_weight(k)
    _require_index(m)


def elliptic_term(k: int, m: int) -> Fraction:
    """-1/2 * sum_{t^2 < 4m} S_{k-2}(t, m) * H(4m - t^2)."""
    _check(k, m)
    total = Fraction(0)
    bound = isqrt(4 * m - 1)
    for t in range(-bound, bound + 1):
        total += sym_char(k - 2, t, m) * hurwitz(4 * m - t * t)
    return -total / 2


def identity_term(k: int, m: int) -> Fraction:
    """(k - 1)/12 * m^((k-2)/2) when m is a square, else 0."""
    _check(k, m)
    if not is_perfect_square(m):
        return Fraction(0)
    return Fraction(k - 1, 12) * to_rational(m) ** ((k - 2) // 2)


def hyperbolic_term(k: int, m: int) -> Fraction:
    """-1/2 * sum over ordered factorizations m = d * d' of min(d, d')^(k-1)."""
    _check(k, m)
    return -Fraction(sum(min(d, m // d) ** (k - 1) for d in divisors(m)), 2)


def trace_cusp(k: int, m: int) -> TraceBreakdown:
    """
    Exact trace of T_m on S_k(SL2(Z)) with its distribution breakdown.

    Raises:
        DomainError: If k is odd or below 4, or m < 1
        UnsupportedScopeError: If k = 2
    """
    identity = identity_term(k, m)
    elliptic = elliptic_term(k, m)
    hyperbolic = hyperbolic_term(k, m)
    return TraceBreakdown(k, m, identity, elliptic, hyperbolic, identity + elliptic + hyperbolic)


def trace_of(k: int, datum: HeckeDatum) -> TraceBreakdown:
    return trace_cusp(k, datum.m)


def elliptic_term_via_orbital(k: int, m: int) -> Fraction:
    """
    The elliptic term rebuilt from archimedean orbital integrals:
    1/4 * sum_{t^2 < 4m} I_{k,k-2}(companion(t, m)) * H(4m - t^2).
    """
    _check(k, m)
    weight = WeightVector((k,), k - 2)
    total = Fraction(0)
    bound = isqrt(4 * m - 1)
    for t in range(-bound, bound + 1):
        total += arch_orbital(companion(t, m), weight) * hurwitz(4 * m - t * t)
    return total / 4


def folded_elliptic_term(k: int, m: int) -> Fraction:
    """
    -1/2 * sum_{t^2 <= 4m} S_{k-2}(t, m) * H(4m - t^2) with H(0) = -1/12.

    The boundary classes t = +-2*sqrt(m) reproduce the identity term, so this
    equals identity_term + elliptic_term.
    """
    _check(k, m)
    total = -2 * elliptic_term(k, m)
    if is_perfect_square(m):
        root = isqrt(m)
        for t in (-2 * root, 2 * root):
            total += sym_char(k - 2, t, m) * H_ZERO
    return -total / 2
