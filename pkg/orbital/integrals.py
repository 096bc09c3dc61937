"""
Archimedean elliptic orbital integrals of the pseudo-coefficients phi_{k,w}.

At a real place where gamma is elliptic with positive determinant the
normalized integral is -2 times the character of L_{k-2,w}; it vanishes at
hyperbolic places and at places with negative determinant. Over a totally
real field the integral is the product of the per-place values, each place
reading the trace and determinant through its own embedding.
"""

from typing import NamedTuple

from chars import WeightVector, ch_kw
from exact import Scalar, one_like, quad_conj, zero_like
from utils.exceptions import DegenerateInputError, DomainError, UnsupportedScopeError
from .elements import AggregateClass, GroupElementF, classify

PLACE_SWAP = (1, 0)


class OrbitalPair(NamedTuple):
    """I_{k,w}(gamma) next to I_{sigma k,w}(gamma) for a real quadratic base field."""
    original: Scalar
    conjugate_weight: Scalar

    @property
    def equivariant(self) -> bool:
        return quad_conj(self.original) == self.conjugate_weight


def _check_places(gamma: GroupElementF, kw: WeightVector) -> None:
    if kw.degree != len(gamma.embeddings):
        raise DomainError(
            "Weight vector length must equal the number of real embeddings",
            details={"weights": kw.k, "embeddings": len(gamma.embeddings)}
        )


def arch_orbital(gamma: GroupElementF, kw: WeightVector) -> Scalar:
    """
    I_{k,w}(gamma): product over real places of -2 * ch_{k_v-2,w}(i_v(gamma)).

    The value lies in the base field and is expressed through the first
    embedding; it is 0 unless gamma is totally elliptic and totally positive.

    Raises:
        DomainError: If kw has the wrong number of places
        DegenerateInputError: If gamma is parabolic at some embedding
    """
    _check_places(gamma, kw)
    report = classify(gamma)
    if report.aggregate is AggregateClass.DEGENERATE:
        raise DegenerateInputError(
            "Orbital integral undefined on a parabolic class",
            details={"per_embedding": [place.value for place in report.per_embedding]}
        )
    if not report.is_totally_elliptic_positive:
        return zero_like(gamma.trace)

    value = one_like(gamma.trace)
    for k_v, embedding in zip(kw.k, gamma.embeddings):
        t_v, n_v = gamma.at(embedding)
        value = value * (-2 * ch_kw(k_v - 2, kw.w, t_v, n_v))
    return value


def _require_quadratic(gamma: GroupElementF, kw: WeightVector) -> None:
    if gamma.field is None or kw.degree != 2:
        raise UnsupportedScopeError(
            "Weight conjugation needs a real quadratic base field and two weights",
            details={"d": gamma.field, "weights": kw.k}
        )


def orbital_pair(gamma: GroupElementF, kw: WeightVector) -> OrbitalPair:
    """(I_{k,w}(gamma), I_{sigma k,w}(gamma)) with sigma swapping the two places."""
    _require_quadratic(gamma, kw)
    return OrbitalPair(
        arch_orbital(gamma, kw),
        arch_orbital(gamma, kw.permuted(PLACE_SWAP)),
    )


def orbital_equivariance_check(gamma: GroupElementF, kw: WeightVector) -> bool:
    """
    Whether sigma(I_{k,w}(gamma)) = I_{sigma k,w}(gamma) for the nontrivial
    automorphism sigma of Q(sqrt(d)).
    """
    return orbital_pair(gamma, kw).equivariant
