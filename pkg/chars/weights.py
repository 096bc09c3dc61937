"""
Weight data model: archimedean weight vectors and representation labels.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from utils.exceptions import AlgebraicityError, DomainError


def _require_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class WeightVector:
    """
    Archimedean weights k = (k_v), one per real place, with central exponent w.

    Enforces the parity condition: every k_v is congruent to w modulo 2.
    """

    k: Tuple[int, ...]
    w: int

    def __post_init__(self):
        k = tuple(_require_int("weight entry", entry) for entry in self.k)
        object.__setattr__(self, "k", k)
        _require_int("central exponent w", self.w)
        if not k:
            raise DomainError("A weight vector needs at least one place")
        low = [entry for entry in k if entry < 2]
        if low:
            raise DomainError("Weights must be >= 2", details={"k": k})
        bad = [entry for entry in k if (entry - self.w) % 2]
        if bad:
            raise AlgebraicityError(
                "Parity condition violated: k_v and w must have the same parity",
                details={"k": k, "w": self.w}
            )

    @classmethod
    def of(cls, *k: int, w: int = 0) -> "WeightVector":
        return cls(tuple(k), w)

    @property
    def degree(self) -> int:
        """Number of archimedean places."""
        return len(self.k)

    def is_parallel(self) -> bool:
        return len(set(self.k)) == 1

    def permuted(self, permutation: Sequence[int]) -> "WeightVector":
        """
        Apply a place permutation: entry v of the result is k_{perm^-1(v)}.

        `permutation[i]` is the image of place i.
        """
        permutation = tuple(permutation)
        if sorted(permutation) != list(range(self.degree)):
            raise DomainError(
                "Permutation does not match the number of places",
                details={"permutation": permutation, "degree": self.degree}
            )
        entries = [0] * self.degree
        for source, target in enumerate(permutation):
            entries[target] = self.k[source]
        return WeightVector(tuple(entries), self.w)

    def __str__(self) -> str:
        return f"k=({','.join(str(entry) for entry in self.k)}), w={self.w}"


class RepKind(str, Enum):
    DISCRETE_SERIES = "DiscreteSeries"
    ALGEBRAIC = "AlgebraicRep"
    PRINCIPAL_SERIES = "PrincipalSeries"


@dataclass(frozen=True)
class RepLabel:
    """
    Label of an irreducible representation of GL2(R) as seen by the trace table.

    n is the lowest SO2-type for discrete series and the highest weight for
    algebraic representations; principal series carry no parameter. The optional
    w records the central exponent when the label is used in the GL2 setting.
    """

    kind: RepKind
    n: Optional[int] = None
    w: Optional[int] = None

    def __post_init__(self):
        kind = RepKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is RepKind.PRINCIPAL_SERIES:
            if self.n is not None:
                raise DomainError("Principal series labels carry no parameter")
            return
        n = _require_int("representation parameter", self.n)
        if kind is RepKind.DISCRETE_SERIES and n < 2:
            raise DomainError("Discrete series need n >= 2", details={"n": n})
        if kind is RepKind.ALGEBRAIC and n < 0:
            raise DomainError("Algebraic representations need n >= 0", details={"n": n})

    @classmethod
    def discrete_series(cls, n: int, w: Optional[int] = None) -> "RepLabel":
        return cls(RepKind.DISCRETE_SERIES, n, w)

    @classmethod
    def algebraic(cls, n: int, w: Optional[int] = None) -> "RepLabel":
        return cls(RepKind.ALGEBRAIC, n, w)

    @classmethod
    def principal_series(cls, w: Optional[int] = None) -> "RepLabel":
        return cls(RepKind.PRINCIPAL_SERIES, None, w)
