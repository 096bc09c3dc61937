"""
Exact arithmetic foundation: rationals and quadratic-field elements.
"""

from .rational import (
    Rational,
    to_rational,
    parse_rational,
    format_rational,
    is_perfect_square,
    is_exact,
)
from .quadratic import (
    Embedding,
    Sign,
    QuadElem,
    Scalar,
    check_field_seed,
    to_scalar,
    field_seed,
    common_field,
    lift,
    zero_like,
    one_like,
    is_rational_value,
    quad_arith,
    quad_conj,
    quad_sign,
    sign_at,
    embed,
    quad_sqrt,
    format_quad,
    parse_quad,
)

__all__ = [
    "Rational",
    "to_rational",
    "parse_rational",
    "format_rational",
    "is_perfect_square",
    "is_exact",
    "Embedding",
    "Sign",
    "QuadElem",
    "Scalar",
    "check_field_seed",
    "to_scalar",
    "field_seed",
    "common_field",
    "lift",
    "zero_like",
    "one_like",
    "is_rational_value",
    "quad_arith",
    "quad_conj",
    "quad_sign",
    "sign_at",
    "embed",
    "quad_sqrt",
    "format_quad",
    "parse_quad",
]
