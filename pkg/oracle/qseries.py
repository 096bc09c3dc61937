"""
Truncated power series in q with exact rational coefficients.

A QSeries knows its coefficients strictly below q^prec and never reads past
that bound: sums and products truncate to the smaller precision, and the
Hecke action shrinks the precision to what the input supports.
"""

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Tuple

from sympy import divisors

from exact import to_rational
from utils.exceptions import DomainError, PrecisionError


class QSeries:
    """Immutable q-expansion sum_{n < prec} coeffs[n] q^n."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(to_rational(value) for value in coeffs)
        if not coeffs:
            raise DomainError("A q-series needs at least one known coefficient")
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @classmethod
    def monomial(cls, exponent: int, prec: int, coefficient=1) -> "QSeries":
        coeffs = [0] * prec
        if exponent < prec:
            coeffs[exponent] = coefficient
        return cls(coeffs)

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls.monomial(0, prec)

    @property
    def prec(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n >= self.prec:
            raise PrecisionError(
                f"Coefficient q^{n} is beyond the known precision",
                details={"n": n, "prec": self.prec}
            )
        return self._coeffs[n]

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise PrecisionError(
                "Cannot raise the precision of a truncated series",
                details={"requested": prec, "prec": self.prec}
            )
        return QSeries(self._coeffs[:prec])

    def valuation(self) -> Optional[int]:
        """Index of the first non-zero coefficient, None if all known ones vanish."""
        for n, value in enumerate(self._coeffs):
            if value:
                return n
        return None

    def is_cuspidal(self) -> bool:
        return self._coeffs[0] == 0

    def __add__(self, other: "QSeries") -> "QSeries":
        prec = min(self.prec, other.prec)
        return QSeries(x + y for x, y in zip(self._coeffs[:prec], other.coeffs[:prec]))

    def __neg__(self) -> "QSeries":
        return QSeries(-x for x in self._coeffs)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def scale(self, factor) -> "QSeries":
        factor = to_rational(factor)
        return QSeries(factor * x for x in self._coeffs)

    def __mul__(self, other: "QSeries") -> "QSeries":
        prec = min(self.prec, other.prec)
        left, right = self._coeffs, other.coeffs
        out = [Fraction(0)] * prec
        for i in range(prec):
            x = left[i]
            if not x:
                continue
            for j in range(prec - i):
                y = right[j]
                if y:
                    out[i + j] += x * y
        return QSeries(out)

    def __pow__(self, exponent: int) -> "QSeries":
        if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = QSeries.one(self.prec)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, exponent: int) -> "QSeries":
        """Multiply by q^exponent; the precision grows by the same amount."""
        return QSeries((0,) * exponent + self._coeffs)

    def hecke(self, m: int, k: int) -> "QSeries":
        """
        T_m on a weight-k form: a_n(T_m f) = sum_{d | gcd(m, n)} d^(k-1) a_{mn/d^2}(f).

        The result is known below (prec - 1) // m + 1, the largest bound for
        which every index m*n/d^2 stays inside the input.
        """
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise DomainError(f"Hecke index must be a positive integer, got {m!r}")
        out_prec = (self.prec - 1) // m + 1
        out = []
        for n in range(out_prec):
            total = Fraction(0)
            for d in divisors(gcd(m, n)):
                total += d ** (k - 1) * self[m * n // (d * d)]
            out.append(total)
        return QSeries(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return self._coeffs[:prec] == other.coeffs[:prec]

    def __repr__(self) -> str:
        shown = " + ".join(f"{c}*q^{n}" for n, c in enumerate(self._coeffs[:6]) if c)
        return f"QSeries({shown or '0'} + O(q^{self.prec}))"

