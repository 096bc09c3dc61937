"""
Positive-definite binary quadratic forms ax^2 + bxy + cy^2.

Two independent routes to the reduced classes of discriminant -N: direct
enumeration of reduced triples, and Gauss reduction of every form in a box.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import List, Set

from utils.exceptions import DomainError


@dataclass(frozen=True, order=True)
class ReducedForm:
    """A reduced positive-definite form: |b| <= a <= c, b >= 0 if |b| = a or a = c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if a <= 0 or b * b - 4 * a * c >= 0:
            raise DomainError("Form is not positive definite", details={"form": (a, b, c)})
        if not (abs(b) <= a <= c) or ((abs(b) == a or a == c) and b < 0):
            raise DomainError("Form is not reduced", details={"form": (a, b, c)})

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def weight(self) -> Fraction:
        """1/2 for multiples of x^2+y^2, 1/3 for multiples of x^2+xy+y^2, else 1."""
        if self.b == 0 and self.a == self.c:
            return Fraction(1, 2)
        if self.a == self.b == self.c:
            return Fraction(1, 3)
        return Fraction(1)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def _require_discriminant(N: int) -> None:
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise DomainError(f"Need a positive integer N for discriminant -N, got {N!r}")


def reduced_forms(N: int) -> List[ReducedForm]:
    """
    All reduced positive-definite forms of discriminant -N, sorted.

    Every reduced form has 3a^2 <= 4ac - b^2 = N, so a runs up to sqrt(N/3).
    """
    _require_discriminant(N)
    if N % 4 in (1, 2):
        return []
    forms = []
    for a in range(1, isqrt(N // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - N) % 2:
                continue
            numerator = b * b + N
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            forms.append(ReducedForm(a, b, c))
    return sorted(forms)


def reduce_form(a: int, b: int, c: int) -> ReducedForm:
    """
    Gauss reduction of a positive-definite form to its reduced representative.

    Alternates the translation x -> x + ky (bringing b into (-a, a]) with the
    inversion (a, b, c) -> (c, -b, a) until a <= c.
    """
    if a <= 0 or b * b - 4 * a * c >= 0:
        raise DomainError("Form is not positive definite", details={"form": (a, b, c)})
    while True:
        remainder = b % (2 * a)
        if remainder > a:
            remainder -= 2 * a
        k = (remainder - b) // (2 * a)
        b, c = remainder, a * k * k + b * k + c
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return ReducedForm(a, b, c)


def _automorph_count(form: ReducedForm) -> int:
    """
    Size of the SL2(Z) stabilizer of a reduced form.

    Automorphs of reduced forms have entries in {-1, 0, 1}.
    """
    a, b, c = form.a, form.b, form.c
    count = 0
    for p, q, r, s in product((-1, 0, 1), repeat=4):
        if p * s - q * r != 1:
            continue
        # f(px + qy, rx + sy) = A x^2 + B xy + C y^2
        A = a * p * p + b * p * r + c * r * r
        B = 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s
        C = a * q * q + b * q * s + c * s * s
        if (A, B, C) == (a, b, c):
            count += 1
    return count


def classes_by_reduction(N: int) -> Set[ReducedForm]:
    """Reduced classes of discriminant -N found by reducing every form in a search box."""
    _require_discriminant(N)
    bound = isqrt(N) + 1
    found = set()
    for a in range(1, bound + 1):
        for b in range(-2 * bound, 2 * bound + 1):
            numerator = b * b + N
            if numerator % (4 * a):
                continue
            found.add(reduce_form(a, b, numerator // (4 * a)))
    return found


def hurwitz_by_reduction(N: int) -> Fraction:
    """H(N) for N >= 1 from box reduction, weighting each class by 2 / |Aut|."""
    return sum(
        (Fraction(2, _automorph_count(form)) for form in classes_by_reduction(N)),
        Fraction(0),
    )
