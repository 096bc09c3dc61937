"""
Seeded generators of group elements for the equivariance and vanishing suites.

Candidates are drawn from small boxes and kept by rejection on the exact
classification, so every returned element provably has the requested type.
"""

import random
from typing import Optional

from exact import QuadElem, Scalar, to_rational
from utils.exceptions import DomainError
from .elements import AggregateClass, GroupElementF, PlaceClass, classify, companion

COEFF_RANGE = 4
MAX_ATTEMPTS = 10_000


def _small_rational(rng: random.Random) -> Scalar:
    numerator = rng.randint(-COEFF_RANGE, COEFF_RANGE)
    denominator = rng.choice((1, 1, 1, 2, 3))
    return to_rational(numerator) / denominator


def _small_scalar(rng: random.Random, d: Optional[int]) -> Scalar:
    if d is None:
        return _small_rational(rng)
    return QuadElem(d, _small_rational(rng), _small_rational(rng))


def _random_conjugator(rng: random.Random, d: Optional[int]) -> GroupElementF:
    for _ in range(MAX_ATTEMPTS):
        a, b, c, e = (_small_scalar(rng, d) for _ in range(4))
        if a * e - b * c != 0:
            return GroupElementF((a, b, c, e))
    raise DomainError("Could not draw an invertible conjugator", details={"d": d})


def _disguise(gamma: GroupElementF, rng: random.Random, d: Optional[int]) -> GroupElementF:
    """Conjugate by a random invertible matrix so entries are not in companion shape."""
    return gamma.conjugate_by(_random_conjugator(rng, d))


def random_totally_elliptic(d: Optional[int], rng: random.Random) -> GroupElementF:
    """
    A random gamma over Q(sqrt(d)) (or Q when d is None) that is elliptic with
    positive determinant at every real embedding.
    """
    for _ in range(MAX_ATTEMPTS):
        t = _small_scalar(rng, d)
        # Push the determinant above t_v^2 / 4 at both places most of the time
        shift = rng.randint(0, 3 * COEFF_RANGE * COEFF_RANGE)
        n = t * t / 4 + shift + _small_scalar(rng, d)
        if n == 0:
            continue
        candidate = companion(t, n, d)
        if classify(candidate).is_totally_elliptic_positive:
            return _disguise(candidate, rng, d)
    raise DomainError("Rejection sampling exhausted", details={"d": d, "kind": "totally_elliptic"})


def random_vanishing(d: Optional[int], rng: random.Random) -> GroupElementF:
    """
    A random gamma that is regular everywhere but hyperbolic or of negative
    determinant at one embedding at least, alternating between the two cases.
    """
    want_negative_det = rng.random() < 0.5
    for _ in range(MAX_ATTEMPTS):
        t = _small_scalar(rng, d)
        n = _small_scalar(rng, d)
        if want_negative_det:
            n = n - rng.randint(1, 2 * COEFF_RANGE)
        if n == 0:
            continue
        candidate = companion(t, n, d)
        report = classify(candidate)
        if report.aggregate is not AggregateClass.EXCLUDED:
            continue
        if want_negative_det and PlaceClass.NEGATIVE_DET not in report.per_embedding:
            continue
        return _disguise(candidate, rng, d)
    raise DomainError("Rejection sampling exhausted", details={"d": d, "kind": "vanishing"})
