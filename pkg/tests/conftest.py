"""
Pytest configuration and fixtures for sigma-trace tests.
"""

import random
from fractions import Fraction

import pytest

from classnum.hurwitz import _get_shared_table
from exact import QuadElem

SEED = 20240607


@pytest.fixture
def rng():
    """Seeded random generator so sampled cases are reproducible."""
    return random.Random(SEED)


@pytest.fixture
def sqrt5():
    """sqrt(5) in Q(sqrt(5))."""
    return QuadElem(5, 0, 1)


@pytest.fixture
def golden(sqrt5):
    """(1 + sqrt(5)) / 2, with trace 1 and norm -1."""
    return (1 + sqrt5) / 2


@pytest.fixture
def random_quad(rng):
    """Factory for random elements of Q(sqrt(d)) with small rational parts."""
    def make(d, size=6):
        def part():
            return random_fraction(rng, size)
        return QuadElem(d, part(), part())
    return make


def random_fraction(rng, size=6):
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


@pytest.fixture
def fresh_hurwitz_table():
    """Empty the shared class-number memo before and after a test."""
    table = _get_shared_table()
    table.clear()
    yield table
    table.clear()
