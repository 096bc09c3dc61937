"""
Hurwitz class numbers H(N) and the Kronecker-Hurwitz class number relation.

H(0) = -1/12; for N > 0, H(N) is the weighted count of reduced forms of
discriminant -N. Values up to HURWITZ_CACHE_BOUND are memoized in a shared,
lock-protected table; fills are idempotent, so concurrent readers may race
to compute the same entry without harm.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from sympy import divisor_sigma, divisors

from config import HURWITZ_CACHE_BOUND
from utils.logger import get_logger
from utils.exceptions import DomainError
from .forms import reduced_forms

logger = get_logger(__name__)

H_ZERO = Fraction(-1, 12)

# Module-level singleton shared by the engine and the suites
_shared_table = None


def _get_shared_table() -> "HurwitzTable":
    """Get or create the shared HurwitzTable instance."""
    global _shared_table
    if _shared_table is None:
        _shared_table = HurwitzTable()
    return _shared_table


def _compute(N: int) -> Fraction:
    if N == 0:
        return H_ZERO
    return sum((form.weight for form in reduced_forms(N)), Fraction(0))


class HurwitzTable:
    """Memo of H(N) for 0 <= N <= bound."""

    def __init__(self, bound: Optional[int] = None):
        self.bound = HURWITZ_CACHE_BOUND if bound is None else bound
        self._values: Dict[int, Fraction] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, N: int) -> Fraction:
        if isinstance(N, bool) or not isinstance(N, int) or N < 0:
            raise DomainError(f"Hurwitz class numbers need an integer N >= 0, got {N!r}")
        if N > self.bound:
            return _compute(N)
        value = self._values.get(N)
        if value is None:
            value = _compute(N)
            with self._lock:
                self._values.setdefault(N, value)
            logger.debug("Cached H(%d) = %s", N, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._values.clear()


def hurwitz(N: int) -> Fraction:
    """
    Hurwitz class number H(N).

    Raises:
        DomainError: If N is negative
    """
    return _get_shared_table().get(N)


@dataclass(frozen=True)
class ClassNumberRelation:
    """Both sides of sum_t H(4m - t^2) = 2*sigma(m) - sum_{d|m} min(d, m/d)."""

    m: int
    class_number_sum: Fraction
    divisor_side: Fraction

    @property
    def holds(self) -> bool:
        return self.class_number_sum == self.divisor_side


def class_number_relation(m: int) -> ClassNumberRelation:
    """
    Evaluate the Kronecker-Hurwitz relation at m >= 1, the t^2 = 4m terms
    entering with H(0) = -1/12.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"Class number relation needs m >= 1, got {m!r}")
    total = Fraction(0)
    t = 0
    while t * t <= 4 * m:
        value = hurwitz(4 * m - t * t)
        total += value if t == 0 else 2 * value
        t += 1
    divisor_side = 2 * int(divisor_sigma(m, 1)) - sum(min(d, m // d) for d in divisors(m))
    return ClassNumberRelation(m, total, Fraction(divisor_side))
