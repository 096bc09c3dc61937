"""
Archimedean orbital integrals: group elements, ellipticity classification,
character evaluation and weight-conjugation equivariance.
"""

from .elements import (
    PlaceClass,
    AggregateClass,
    EllipticityReport,
    GroupElementF,
    classify,
    companion,
    parse_gamma,
)
from .integrals import (
    OrbitalPair,
    arch_orbital,
    orbital_pair,
    orbital_equivariance_check,
)
from .sampling import random_totally_elliptic, random_vanishing

__all__ = [
    "PlaceClass",
    "AggregateClass",
    "EllipticityReport",
    "GroupElementF",
    "classify",
    "companion",
    "parse_gamma",
    "OrbitalPair",
    "arch_orbital",
    "orbital_pair",
    "orbital_equivariance_check",
    "random_totally_elliptic",
    "random_vanishing",
]
