"""
Character engine for GL2 / SL2.

Characters are evaluated from a (trace, determinant) pair only: the symmetric
power character obeys S_k = t*S_{k-1} - n*S_{k-2}, which stays inside the
scalar domain of t and n (no eigenvalues, no splitting field).
"""

from typing import Optional

from exact import Scalar, common_field, lift, one_like, to_scalar
from utils.exceptions import AlgebraicityError, DomainError, UnsupportedScopeError
from .weights import RepKind, RepLabel


def _pair(t, n):
    t, n = to_scalar(t), to_scalar(n)
    d = common_field(t, n)
    return lift(t, d), lift(n, d)


def sym_char(k: int, t, n) -> Scalar:
    """
    Trace of Sym^k on any matrix with trace t and determinant n.

    Args:
        k: Symmetric power, k >= 0
        t: Trace (Rational or QuadElem)
        n: Determinant, same scalar domain as t

    Returns:
        S_k(t, n) in the scalar domain of (t, n)
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise DomainError(f"Symmetric power must be a non-negative integer, got {k!r}")
    t, n = _pair(t, n)
    previous, current = one_like(t), t
    if k == 0:
        return previous
    for _ in range(k - 1):
        previous, current = current, t * current - n * previous
    return current


def ch_kw(k: int, w: int, t, n) -> Scalar:
    """
    Character of L_{k,w} = Sym^k (x) det^{(w-k)/2} at a class with trace t, det n.

    Raises:
        AlgebraicityError: If k and w have different parity
        DomainError: If n = 0
    """
    if (k - w) % 2:
        raise AlgebraicityError(
            "Parity condition violated: L_{k,w} needs k = w (mod 2)",
            details={"k": k, "w": w}
        )
    t, n = _pair(t, n)
    if n == 0:
        raise DomainError("Determinant must be non-zero", details={"k": k, "w": w})
    return n ** ((w - k) // 2) * sym_char(k, t, n)


def ds_char_elliptic(m: int, t, n) -> Scalar:
    """
    Discrete-series character D_m on an elliptic class: -S_{m-2}(t, n).

    Ellipticity (t^2 - 4n < 0) is the caller's contract.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise DomainError(f"Discrete series need m >= 2, got {m!r}")
    return -sym_char(m - 2, t, n)


def pseudo_coeff_trace(k: int, rep: RepLabel, w: Optional[int] = None) -> int:
    """
    Trace of the pseudo-coefficient phi_k (phi_{k,w} when w is given) on rep.

    Returns +1 on D_k, -1 on L_{k-2}, 0 on every other label.

    Raises:
        AlgebraicityError: If w is given and k, w have different parity
        DomainError: If rep carries a central exponent other than w
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise DomainError(f"Pseudo-coefficients exist for k >= 2, got {k!r}")
    if w is not None:
        if (k - w) % 2:
            raise AlgebraicityError(
                "Parity condition violated for phi_{k,w}",
                details={"k": k, "w": w}
            )
        if rep.w is not None and rep.w != w:
            raise DomainError(
                "Representation has a different central character",
                details={"expected_w": w, "found_w": rep.w}
            )
    if rep.kind is RepKind.DISCRETE_SERIES and rep.n == k:
        return 1
    if rep.kind is RepKind.ALGEBRAIC and rep.n == k - 2:
        return -1
    return 0


def isotypic_trace(k: int, n: int) -> int:
    """
    Trace of D_k(phi_k) on the delta_n-isotypic component.

    Known values: 1 for n = k, 0 for n > k.

    Raises:
        UnsupportedScopeError: For n < k, which is left open
    """
    if n == k:
        return 1
    if n > k:
        return 0
    raise UnsupportedScopeError(
        "Isotypic trace below the lowest type is not determined",
        details={"k": k, "n": n}
    )


def central_parity(k: int, w: int) -> int:
    """Value of the central character of D_{k,w} at -1, i.e. (-1)^k."""
    return -1 if k % 2 else 1
