"""
The action of sigma on weights, Hecke data and field values.

Over Q sigma acts trivially. Over a real quadratic field Q(sqrt(d)) the
nontrivial automorphism swaps the two real places, so it conjugates values
and permutes the two weight entries together.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from chars import WeightVector
from exact import check_field_seed, field_seed, quad_conj, to_scalar
from tfengine import HeckeDatum
from utils.exceptions import DomainError, FieldMismatchError

IDENTITY_PERMUTATIONS = {1: (0,), 2: (0, 1)}
PLACE_SWAP = (1, 0)


@dataclass(frozen=True)
class SigmaAction:
    """
    An automorphism of the base field together with its place permutation.

    base_field is None for Q, otherwise the seed d > 0 of Q(sqrt(d)).
    """

    base_field: Optional[int]
    weight_permutation: Tuple[int, ...]

    def __post_init__(self):
        permutation = tuple(self.weight_permutation)
        object.__setattr__(self, "weight_permutation", permutation)
        if self.base_field is None:
            if permutation != (0,):
                raise DomainError("Over Q the place permutation is trivial", details={"permutation": permutation})
            return
        check_field_seed(self.base_field)
        if self.base_field < 0:
            raise DomainError("Weight conjugation needs a real quadratic field", details={"d": self.base_field})
        if permutation not in (IDENTITY_PERMUTATIONS[2], PLACE_SWAP):
            raise DomainError(
                "A quadratic field has two places",
                details={"permutation": permutation}
            )

    @classmethod
    def identity(cls, d: Optional[int] = None) -> "SigmaAction":
        return cls(d, IDENTITY_PERMUTATIONS[1 if d is None else 2])

    @classmethod
    def nontrivial(cls, d: int) -> "SigmaAction":
        return cls(d, PLACE_SWAP)

    @property
    def degree(self) -> int:
        return len(self.weight_permutation)

    @property
    def is_identity(self) -> bool:
        return self.weight_permutation == IDENTITY_PERMUTATIONS[self.degree]

    def apply(self, value):
        """sigma(value) for a rational or an element of the base field."""
        value = to_scalar(value)
        d = field_seed(value)
        if d is not None and d != self.base_field:
            raise FieldMismatchError(
                "Value lives outside the base field of sigma",
                details={"value_d": d, "base_field": self.base_field}
            )
        return value if self.is_identity else quad_conj(value)

    def compose(self, other: "SigmaAction") -> "SigmaAction":
        """self after other."""
        if self.base_field != other.base_field:
            raise FieldMismatchError(
                "Cannot compose automorphisms of different fields",
                details={"left": self.base_field, "right": other.base_field}
            )
        permutation = tuple(self.weight_permutation[i] for i in other.weight_permutation)
        return SigmaAction(self.base_field, permutation)

    def __str__(self) -> str:
        field = "Q" if self.base_field is None else f"Q(sqrt({self.base_field}))"
        return f"{'id' if self.is_identity else 'sigma'} on {field}"


def galois_group(d: Optional[int] = None) -> List[SigmaAction]:
    """All automorphisms of Q or Q(sqrt(d))."""
    if d is None:
        return [SigmaAction.identity()]
    return [SigmaAction.identity(d), SigmaAction.nontrivial(d)]


def conjugate_weight(kw: WeightVector, sigma: SigmaAction) -> WeightVector:
    """
    The weight {}^sigma k = (k_{sigma^-1(v)}); w is unchanged.

    Raises:
        DomainError: If the permutation length differs from the number of weights
    """
    if kw.degree != sigma.degree:
        raise DomainError(
            "Weight vector and automorphism act on different numbers of places",
            details={"weights": kw.k, "places": sigma.degree}
        )
    return kw.permuted(sigma.weight_permutation)


def conjugate_hecke(
    datum: Union[HeckeDatum, Sequence[HeckeDatum]],
    sigma: SigmaAction,
) -> Union[HeckeDatum, List[HeckeDatum]]:
    """
    sigma applied to the values of a Hecke datum.

    T_m takes rational values, so it is fixed by every sigma.
    """
    if isinstance(datum, HeckeDatum):
        return datum
    return [conjugate_hecke(item, sigma) for item in datum]


def weight_orbit(kw: WeightVector, group: Iterable[SigmaAction]) -> List[WeightVector]:
    """The finite orbit of kw under a group of automorphisms, in first-seen order."""
    orbit: List[WeightVector] = []
    for sigma in group:
        image = conjugate_weight(kw, sigma)
        if image not in orbit:
            orbit.append(image)
    return orbit
