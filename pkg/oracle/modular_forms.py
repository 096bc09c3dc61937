"""
q-expansions of E4, E6 and Delta, and monomial bases of S_k(SL2(Z)).
"""

from functools import lru_cache
from typing import List, Tuple

from sympy import divisor_sigma

from utils.exceptions import DomainError, UnsupportedScopeError
from .qseries import QSeries

# E_k = 1 + C_k * sum sigma_{k-1}(n) q^n
EISENSTEIN_CONSTANTS = {4: 240, 6: -504}


def eisenstein(weight: int, prec: int) -> QSeries:
    """
    E4 or E6 to precision prec.

    Raises:
        DomainError: For weights other than 4 and 6, or prec < 1
    """
    if weight not in EISENSTEIN_CONSTANTS:
        raise DomainError(f"Only E4 and E6 are provided, got weight {weight!r}")
    if prec < 1:
        raise DomainError(f"Precision must be >= 1, got {prec}")
    constant = EISENSTEIN_CONSTANTS[weight]
    return QSeries(
        [1] + [constant * int(divisor_sigma(n, weight - 1)) for n in range(1, prec)]
    )


def _euler_product(prec: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) via the pentagonal number theorem."""
    coeffs = [0] * prec
    j = 0
    while True:
        sign = -1 if j % 2 else 1
        low, high = j * (3 * j - 1) // 2, j * (3 * j + 1) // 2
        if low >= prec:
            break
        coeffs[low] = sign
        if j and high < prec:
            coeffs[high] = sign
        j += 1
    return QSeries(coeffs)


def delta(prec: int) -> QSeries:
    """Delta = q * prod (1 - q^n)^24 to precision prec."""
    if prec < 2:
        raise DomainError(f"Delta needs precision >= 2, got {prec}")
    return (_euler_product(prec - 1) ** 24).shift(1)


def basis_exponents(k: int) -> List[Tuple[int, int, int]]:
    """
    Exponents (a, b, c) of the monomials Delta^a E4^b E6^c spanning S_k.

    One monomial per a >= 1 with k - 12a != 2, taking c in {0, 1};
    ordered by descending a.
    """
    _require_weight(k)
    exponents = []
    for a in range(k // 12, 0, -1):
        rest = k - 12 * a
        if rest % 4 == 0:
            exponents.append((a, rest // 4, 0))
        elif rest >= 6:
            exponents.append((a, (rest - 6) // 4, 1))
    return exponents


def _require_weight(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k % 2 or k < 2:
        raise DomainError(f"Level-one weights must be even and >= 4, got {k!r}")
    if k == 2:
        raise UnsupportedScopeError("Weight 2 is outside the supported range", details={"k": k})


@lru_cache(maxsize=64)
def cusp_basis(k: int, prec: int) -> Tuple[QSeries, ...]:
    """The monomial basis of S_k(SL2(Z)), each element known below q^prec."""
    exponents = basis_exponents(k)
    if not exponents:
        return ()
    d, e4, e6 = delta(prec), eisenstein(4, prec), eisenstein(6, prec)
    return tuple((d ** a) * (e4 ** b) * (e6 ** c) for a, b, c in exponents)


def cusp_dimension(k: int) -> int:
    """dim S_k(SL2(Z)) from the classical closed form."""
    _require_weight(k)
    modular = k // 12 + (0 if k % 12 == 2 else 1)
    return modular - 1
