"""
Exact Hecke matrices on S_k(SL2(Z)) from q-expansions.

The monomial basis is triangular: Delta^a E4^b E6^c starts with q^a, so the
coordinates of T_m f are read off the coefficients at the leading exponents
and the remainder is checked to vanish over the whole known range.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import Matrix, Rational, symbols

from config import ORACLE_EXTRA_PRECISION
from utils.logger import get_logger
from utils.exceptions import DomainError, PrecisionError
from .modular_forms import basis_exponents, cusp_basis
from .qseries import QSeries

logger = get_logger(__name__)

_x = symbols("x")


def working_precision(k: int, m: int) -> int:
    """dim(S_k) * (m + 1) + ORACLE_EXTRA_PRECISION coefficients."""
    return len(basis_exponents(k)) * (m + 1) + ORACLE_EXTRA_PRECISION


def _require_index(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"Hecke index must be a positive integer, got {m!r}")


def coordinates(series: QSeries, basis: Sequence[QSeries], leads: Sequence[int]) -> List[Fraction]:
    """
    Solve series = sum x_i basis_i using the leading exponents.

    Raises:
        PrecisionError: If a leading exponent is beyond the known range or the
            remainder does not vanish (the series is not in the span)
    """
    residual = series
    solution = [Fraction(0)] * len(basis)
    for i in sorted(range(len(basis)), key=lambda index: leads[index]):
        lead = leads[i]
        pivot = basis[i][lead]
        if pivot == 0:
            raise PrecisionError("Singular coordinate solve", details={"lead": lead})
        solution[i] = residual[lead] / pivot
        if solution[i]:
            residual = residual - basis[i].scale(solution[i])
    if residual.valuation() is not None:
        raise PrecisionError(
            "Series is not in the span of the basis at this precision",
            details={"valuation": residual.valuation(), "prec": residual.prec}
        )
    return solution


def hecke_matrix(k: int, m: int, prec: Optional[int] = None) -> Matrix:
    """
    Matrix of T_m on the monomial basis of S_k (column j holds T_m of basis j).

    Args:
        k: Even weight >= 4
        m: Hecke index >= 1
        prec: Working precision; defaults to working_precision(k, m)
    """
    _require_index(m)
    exponents = basis_exponents(k)
    dim = len(exponents)
    if dim == 0:
        return Matrix.zeros(0, 0)
    prec = working_precision(k, m) if prec is None else prec
    if (prec - 1) // m + 1 <= dim:
        raise PrecisionError(
            "Working precision too small for the coordinate solve",
            details={"k": k, "m": m, "prec": prec, "dim": dim}
        )
    logger.debug("Hecke matrix k=%d m=%d at precision %d", k, m, prec)

    basis = cusp_basis(k, prec)
    leads = [a for a, _, _ in exponents]
    columns = [coordinates(f.hecke(m, k), basis, leads) for f in basis]
    return Matrix(dim, dim, lambda i, j: Rational(columns[j][i].numerator, columns[j][i].denominator))


def to_fraction(value) -> Fraction:
    """Convert an exact sympy rational to a Fraction."""
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def oracle_trace(k: int, m: int) -> Fraction:
    """Exact trace of T_m on S_k(SL2(Z))."""
    return to_fraction(hecke_matrix(k, m).trace())


def charpoly(k: int, m: int) -> List[int]:
    """
    Coefficients of det(xI - T_m), leading coefficient first.

    Raises:
        PrecisionError: If a coefficient is not an integer
    """
    matrix = hecke_matrix(k, m)
    if matrix.rows == 0:
        return [1]
    coefficients = matrix.charpoly(_x).all_coeffs()
    if not all(Rational(c).is_integer for c in coefficients):
        raise PrecisionError(
            "Characteristic polynomial has non-integer coefficients",
            details={"k": k, "m": m, "coefficients": [str(c) for c in coefficients]}
        )
    return [int(c) for c in coefficients]
