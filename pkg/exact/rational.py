"""
Exact rational scalars.

`Rational` is `fractions.Fraction`: arbitrary-precision numerator and a positive
denominator, reduced after every operation. This module adds the coercion rules
of the trusted path (floats are refused) and the canonical "p/q" text form.
"""

import re
from decimal import Decimal
from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC

from utils.exceptions import ExactnessError, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


def to_rational(value) -> Fraction:
    """
    Coerce an exact value to a Fraction.

    Args:
        value: int, Fraction, or text in the "p/q" grammar

    Returns:
        The value as a Fraction

    Raises:
        ExactnessError: If value is a float, Decimal or complex number
        ParseError: If value is text that does not parse
    """
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, (float, complex, Decimal)):
        raise ExactnessError(
            "Floating value reached the exact arithmetic path",
            details={"value": repr(value), "type": type(value).__name__}
        )
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise ExactnessError(
        f"Cannot coerce {type(value).__name__} to an exact rational",
        details={"value": repr(value)}
    )


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ParseError(f"Not a rational: {text!r}", details={"grammar": "p/q | p"})
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ParseError(f"Zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_perfect_square(value) -> bool:
    """True if the rational is the square of a rational."""
    value = to_rational(value)
    if value < 0:
        return False
    num, den = value.numerator, value.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def is_exact(value) -> bool:
    """
    Exactness predicate used by the algebraicity audit.

    True for int, Fraction and quadratic-field elements with Fraction parts;
    False for anything floating.
    """
    from .quadratic import QuadElem

    if isinstance(value, bool):
        return False
    if isinstance(value, (int, Fraction)):
        return True
    if isinstance(value, QuadElem):
        return isinstance(value.a, Fraction) and isinstance(value.b, Fraction)
    return False
