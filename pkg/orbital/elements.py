"""
Group elements of GL2(F) for F = Q or a real quadratic field, and their
classification at every real embedding.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from exact import (
    Embedding,
    Scalar,
    Sign,
    common_field,
    embed,
    lift,
    parse_quad,
    sign_at,
    to_rational,
    to_scalar,
)
from utils.exceptions import DomainError


class PlaceClass(str, Enum):
    """Conjugacy type of gamma at one real embedding."""
    ELLIPTIC_POSITIVE = "elliptic_positive"
    # t^2 < 4n forces n > 0 over R, so a negative determinant is always split;
    # the label marks the negative-determinant case of the vanishing statement.
    NEGATIVE_DET = "elliptic_negative_det"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"


class AggregateClass(str, Enum):
    TOTALLY_ELLIPTIC_POSITIVE = "totally_elliptic_positive"
    DEGENERATE = "degenerate"
    EXCLUDED = "excluded"


@dataclass(frozen=True)
class EllipticityReport:
    per_embedding: Tuple[PlaceClass, ...]
    aggregate: AggregateClass

    @property
    def is_totally_elliptic_positive(self) -> bool:
        return self.aggregate is AggregateClass.TOTALLY_ELLIPTIC_POSITIVE


@dataclass(frozen=True)
class GroupElementF:
    """
    A 2x2 invertible matrix [[a, b], [c, e]] over Q or over Q(sqrt(d)), d > 0.

    All entries share one scalar domain; rational entries are lifted into the
    field when any entry is quadratic.
    """

    entries: Tuple[Scalar, Scalar, Scalar, Scalar]

    def __post_init__(self):
        if len(self.entries) != 4:
            raise DomainError("A 2x2 matrix needs exactly four entries")
        values = tuple(to_scalar(entry) for entry in self.entries)
        d = common_field(*values)
        if d is not None and d < 0:
            raise DomainError(
                "Group elements live over Q or a real quadratic field",
                details={"d": d}
            )
        object.__setattr__(self, "entries", tuple(lift(value, d) for value in values))
        if self.det == 0:
            raise DomainError("Matrix is singular", details={"entries": [str(x) for x in self.entries]})

    @classmethod
    def from_entries(cls, a, b, c, e, d: Optional[int] = None) -> "GroupElementF":
        """Build from four entries, lifting rationals into Q(sqrt(d)) when d is given."""
        return cls(tuple(lift(value, d) for value in (a, b, c, e)))

    @property
    def field(self) -> Optional[int]:
        """The d of the base field, or None over Q."""
        return common_field(*self.entries)

    @property
    def trace(self) -> Scalar:
        a, _, _, e = self.entries
        return a + e

    @property
    def det(self) -> Scalar:
        a, b, c, e = self.entries
        return a * e - b * c

    @property
    def embeddings(self) -> Tuple[Embedding, ...]:
        if self.field is None:
            return (Embedding.V1,)
        return (Embedding.V1, Embedding.V2)

    def at(self, embedding: Embedding) -> Tuple[Scalar, Scalar]:
        """(t_v, n_v): trace and determinant pushed through the embedding."""
        return embed(self.trace, embedding), embed(self.det, embedding)

    def __mul__(self, other: "GroupElementF") -> "GroupElementF":
        a, b, c, e = self.entries
        p, q, r, s = other.entries
        return GroupElementF((a * p + b * r, a * q + b * s, c * p + e * r, c * q + e * s))

    def inverse(self) -> "GroupElementF":
        a, b, c, e = self.entries
        det = self.det
        return GroupElementF((e / det, -b / det, -c / det, a / det))

    def conjugate_by(self, g: "GroupElementF") -> "GroupElementF":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def scale(self, z) -> "GroupElementF":
        """The product with the scalar matrix diag(z, z)."""
        return GroupElementF(tuple(to_scalar(z) * entry for entry in self.entries))


def companion(t, n, d: Optional[int] = None) -> GroupElementF:
    """The matrix [[0, -n], [1, t]], which has trace t and determinant n."""
    return GroupElementF.from_entries(0, -to_scalar(n), 1, t, d=d)


def _classify_place(t_v: Scalar, n_v: Scalar, embedding: Embedding) -> PlaceClass:
    discriminant = sign_at(t_v * t_v - 4 * n_v, embedding)
    if discriminant is Sign.ZERO:
        return PlaceClass.PARABOLIC
    if sign_at(n_v, embedding) is Sign.NEGATIVE:
        return PlaceClass.NEGATIVE_DET
    if discriminant is Sign.NEGATIVE:
        return PlaceClass.ELLIPTIC_POSITIVE
    return PlaceClass.HYPERBOLIC


def classify(gamma: GroupElementF) -> EllipticityReport:
    """
    Exact classification of gamma at every real embedding.

    Signs are taken of t^2 - 4n and of n themselves under each embedding, so
    the values are never conjugated by hand.
    """
    t, n = gamma.trace, gamma.det
    per_embedding = tuple(_classify_place(t, n, embedding) for embedding in gamma.embeddings)
    if PlaceClass.PARABOLIC in per_embedding:
        aggregate = AggregateClass.DEGENERATE
    elif all(place is PlaceClass.ELLIPTIC_POSITIVE for place in per_embedding):
        aggregate = AggregateClass.TOTALLY_ELLIPTIC_POSITIVE
    else:
        aggregate = AggregateClass.EXCLUDED
    return EllipticityReport(per_embedding, aggregate)


def parse_gamma(parts: Sequence[str], d: Optional[int] = None) -> GroupElementF:
    """Build a group element from four textual entries (rationals or a+b*sqrt(d))."""
    if len(parts) != 4:
        raise DomainError("gamma needs four entries a,b,c,e", details={"given": list(parts)})
    if d is None:
        return GroupElementF(tuple(to_rational(part) for part in parts))
    return GroupElementF(tuple(parse_quad(part, d) for part in parts))
