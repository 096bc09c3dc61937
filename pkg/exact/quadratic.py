"""
Exact arithmetic in quadratic fields Q(sqrt(d)).

Elements are a + b*sqrt(d) with Fraction parts. The nontrivial Galois
automorphism is `conj`; real-embedding signs are decided by integer case
analysis on sign(a), sign(b) and a^2 versus d*b^2, never by floating point.
"""

import re
from enum import Enum, IntEnum
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from sympy.ntheory.factor_ import core

from utils.exceptions import (
    DomainError,
    FieldMismatchError,
    DivisionByZeroError,
    ParseError,
)
from .rational import to_rational, format_rational


class Embedding(str, Enum):
    """Real embeddings of a real quadratic field."""
    V1 = "v1"  # sqrt(d) -> +sqrt(d)
    V2 = "v2"  # sqrt(d) -> -sqrt(d)


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def check_field_seed(d: int) -> int:
    """
    Validate the seed d of Q(sqrt(d)): a squarefree integer other than 0 and 1.

    Raises:
        DomainError: If d is not an admissible seed
    """
    if isinstance(d, bool) or not isinstance(d, int):
        raise DomainError(f"Field seed must be an integer, got {d!r}")
    if d in (0, 1):
        raise DomainError(f"Field seed must differ from 0 and 1, got {d}", details={"d": d})
    if core(abs(d)) != abs(d):
        raise DomainError(f"Field seed must be squarefree, got {d}", details={"d": d})
    return d


class QuadElem:
    """Immutable element a + b*sqrt(d) of Q(sqrt(d))."""

    __slots__ = ("_d", "_a", "_b")

    def __init__(self, d: int, a=0, b=0) -> None:
        object.__setattr__(self, "_d", check_field_seed(d))
        object.__setattr__(self, "_a", to_rational(a))
        object.__setattr__(self, "_b", to_rational(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadElem is immutable")

    @property
    def d(self) -> int:
        return self._d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def norm(self) -> Fraction:
        return self._a * self._a - self._d * self._b * self._b

    @property
    def trace(self) -> Fraction:
        return 2 * self._a

    def is_rational(self) -> bool:
        """Fixed by conjugation exactly when b = 0."""
        return self._b == 0

    def to_rational(self) -> Fraction:
        if self._b != 0:
            raise DomainError(f"{self} is not rational")
        return self._a

    def conj(self) -> "QuadElem":
        return QuadElem(self._d, self._a, -self._b)

    def sign(self, embedding: Embedding) -> Sign:
        return quad_sign(self, embedding)

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.d != self._d:
                raise FieldMismatchError(
                    "Elements of different quadratic fields do not interoperate",
                    details={"left_d": self._d, "right_d": other.d}
                )
            return other
        return QuadElem(self._d, to_rational(other), 0)

    def __add__(self, other) -> "QuadElem":
        other = self._coerce(other)
        return QuadElem(self._d, self._a + other.a, self._b + other.b)

    def __radd__(self, other) -> "QuadElem":
        return self + other

    def __neg__(self) -> "QuadElem":
        return QuadElem(self._d, -self._a, -self._b)

    def __pos__(self) -> "QuadElem":
        return self

    def __sub__(self, other) -> "QuadElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadElem":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QuadElem":
        other = self._coerce(other)
        return QuadElem(
            self._d,
            self._a * other.a + self._d * self._b * other.b,
            self._a * other.b + self._b * other.a,
        )

    def __rmul__(self, other) -> "QuadElem":
        return self * other

    def inverse(self) -> "QuadElem":
        norm = self.norm
        if norm == 0:
            raise DivisionByZeroError("Division by zero in quadratic field", details={"d": self._d})
        return QuadElem(self._d, self._a / norm, -self._b / norm)

    def __truediv__(self, other) -> "QuadElem":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "QuadElem":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "QuadElem":
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadElem(self._d, 1, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            return self._d == other.d and self._a == other.a and self._b == other.b
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._d, self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __str__(self) -> str:
        return format_quad(self)

    def __repr__(self) -> str:
        return f"QuadElem({format_quad(self)})"


Scalar = Union[Fraction, QuadElem]


def to_scalar(value) -> Scalar:
    """Pass QuadElem through; coerce everything else to an exact rational."""
    if isinstance(value, QuadElem):
        return value
    return to_rational(value)


def field_seed(value) -> Optional[int]:
    """The d of a QuadElem, or None for rationals."""
    return value.d if isinstance(value, QuadElem) else None


def common_field(*values) -> Optional[int]:
    """
    Seed shared by all quadratic values (rationals are compatible with anything).

    Raises:
        FieldMismatchError: If two values live in different quadratic fields
    """
    seed = None
    for value in values:
        d = field_seed(value)
        if d is None:
            continue
        if seed is None:
            seed = d
        elif seed != d:
            raise FieldMismatchError(
                "Values live in different quadratic fields",
                details={"left_d": seed, "right_d": d}
            )
    return seed


def lift(value, d: Optional[int]) -> Scalar:
    """Embed a rational into Q(sqrt(d)); identity when d is None."""
    value = to_scalar(value)
    if d is None or isinstance(value, QuadElem):
        return value
    return QuadElem(d, value, 0)


def zero_like(value) -> Scalar:
    d = field_seed(value)
    return Fraction(0) if d is None else QuadElem(d, 0, 0)


def one_like(value) -> Scalar:
    d = field_seed(value)
    return Fraction(1) if d is None else QuadElem(d, 1, 0)


def is_rational_value(value) -> bool:
    """The sigma-fixedness predicate: rational, or quadratic with b = 0."""
    if isinstance(value, QuadElem):
        return value.is_rational()
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


# ============================================================================
# Operations
# ============================================================================

_ARITH_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}


def quad_arith(op: str, x: QuadElem, y: QuadElem) -> QuadElem:
    """
    Exact field arithmetic in Q(sqrt(d)).

    Args:
        op: One of "add", "sub", "mul", "div"
        x, y: Elements of the same field

    Raises:
        FieldMismatchError: If x.d != y.d
        DivisionByZeroError: For division by zero
    """
    if op not in _ARITH_OPS:
        raise DomainError(f"Unknown operation {op!r}", details={"allowed": sorted(_ARITH_OPS)})
    if x.d != y.d:
        raise FieldMismatchError(
            "Elements of different quadratic fields do not interoperate",
            details={"left_d": x.d, "right_d": y.d}
        )
    return _ARITH_OPS[op](x, y)


def quad_conj(x):
    """a + b*sqrt(d) -> a - b*sqrt(d); rationals are fixed."""
    if isinstance(x, QuadElem):
        return x.conj()
    return to_rational(x)


def _rational_sign(value: Fraction) -> Sign:
    if value > 0:
        return Sign.POSITIVE
    if value < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


def quad_sign(x: QuadElem, embedding: Embedding) -> Sign:
    """
    Exact sign of x under the real embedding v1 (sqrt(d) > 0) or v2 (sqrt(d) < 0).

    Raises:
        DomainError: If d < 0 (no real embedding)
    """
    if x.d < 0:
        raise DomainError(
            "Imaginary quadratic field has no real embedding",
            details={"d": x.d}
        )
    a = x.a
    b = x.b if Embedding(embedding) is Embedding.V1 else -x.b
    sign_a, sign_b = _rational_sign(a), _rational_sign(b)

    if sign_b is Sign.ZERO:
        return sign_a
    if sign_a is Sign.ZERO or sign_a == sign_b:
        return sign_b
    # Opposite signs: the larger of |a| and |b|*sqrt(d) wins
    lhs, rhs = a * a, x.d * b * b
    if lhs == rhs:
        return Sign.ZERO
    return sign_a if lhs > rhs else sign_b


def sign_at(value, embedding: Embedding = Embedding.V1) -> Sign:
    """Sign of a rational or real-quadratic value at the given embedding."""
    if isinstance(value, QuadElem):
        return quad_sign(value, embedding)
    return _rational_sign(to_rational(value))


def embed(value, embedding: Embedding) -> Scalar:
    """Push a value through an embedding, expressed back in the field via v1."""
    if isinstance(value, QuadElem) and Embedding(embedding) is Embedding.V2:
        return value.conj()
    return to_scalar(value)


def quad_sqrt(value) -> Scalar:
    """
    Exact square root of a rational.

    Returns a Fraction when value is a rational square, otherwise
    f/den * sqrt(D0) as a QuadElem with D0 the squarefree part of num*den.
    """
    value = to_rational(value)
    if value == 0:
        return Fraction(0)
    num, den = value.numerator, value.denominator
    radicand = num * den
    squarefree = core(abs(radicand))
    factor = isqrt(abs(radicand) // squarefree)
    d0 = squarefree if radicand > 0 else -squarefree
    if d0 == 1:
        return Fraction(factor, den)
    return QuadElem(d0, 0, Fraction(factor, den))


# ============================================================================
# Text grammar
# ============================================================================

_QUAD_RE = re.compile(
    r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(-?\d+)\s*\)\s*$"
)


def format_quad(x: QuadElem) -> str:
    """Render as "a+b*sqrt(d)" with explicit signs."""
    sign = "-" if x.b < 0 else "+"
    return f"{format_rational(x.a)}{sign}{format_rational(abs(x.b))}*sqrt({x.d})"


def parse_quad(text: str, d: Optional[int] = None) -> Scalar:
    """
    Parse "a+b*sqrt(d)" (or a plain rational, lifted into Q(sqrt(d)) when d is given).

    Raises:
        ParseError: On grammar mismatch
        FieldMismatchError: If the text names a field other than d
    """
    match = _QUAD_RE.match(text)
    if not match:
        try:
            value = to_rational(text)
        except ParseError:
            raise ParseError(
                f"Not a quadratic-field element: {text!r}",
                details={"grammar": "a+b*sqrt(d) | p/q"}
            ) from None
        return lift(value, d)
    a = to_rational(match.group(1))
    b = to_rational(match.group(3))
    if match.group(2) == "-":
        b = -b
    seed = int(match.group(4))
    if d is not None and seed != d:
        raise FieldMismatchError(
            f"Element {text!r} does not live in Q(sqrt({d}))",
            details={"expected_d": d, "found_d": seed}
        )
    return QuadElem(seed, a, b)
