"""
Tests for weight data and the character engine.
"""

from fractions import Fraction

import numpy as np
import pytest

from chars import (
    RepKind,
    RepLabel,
    WeightVector,
    central_parity,
    ch_kw,
    ds_char_elliptic,
    isotypic_trace,
    pseudo_coeff_trace,
    sym_char,
)
from exact import QuadElem, quad_conj
from utils.exceptions import AlgebraicityError, DomainError, UnsupportedScopeError


class TestWeightVector:
    """Test WeightVector invariants."""

    def test_valid(self):
        """Test construction and accessors."""
        kw = WeightVector.of(4, 6, w=0)
        assert kw.k == (4, 6)
        assert kw.degree == 2
        assert not kw.is_parallel()
        assert WeightVector.of(8, 8).is_parallel()

    def test_parity_violation(self):
        """Test every k_v must match w mod 2."""
        with pytest.raises(AlgebraicityError):
            WeightVector((4, 5), 0)
        with pytest.raises(AlgebraicityError):
            WeightVector((12,), 1)

    def test_bad_entries(self):
        """Test empty, small and non-integer weights."""
        with pytest.raises(DomainError):
            WeightVector((), 0)
        with pytest.raises(DomainError):
            WeightVector((0,), 0)
        with pytest.raises(DomainError):
            WeightVector((4.0,), 0)

    def test_permuted(self):
        """Test place permutations."""
        kw = WeightVector.of(4, 6)
        assert kw.permuted((1, 0)).k == (6, 4)
        assert kw.permuted((0, 1)) == kw
        assert kw.permuted((1, 0)).permuted((1, 0)) == kw
        with pytest.raises(DomainError):
            kw.permuted((0,))


class TestRepLabel:
    """Test representation labels."""

    def test_constructors(self):
        """Test the three kinds."""
        assert RepLabel.discrete_series(12).kind is RepKind.DISCRETE_SERIES
        assert RepLabel.algebraic(0).n == 0
        assert RepLabel.principal_series().n is None

    def test_invalid(self):
        """Test parameter ranges."""
        with pytest.raises(DomainError):
            RepLabel.discrete_series(1)
        with pytest.raises(DomainError):
            RepLabel.algebraic(-1)
        with pytest.raises(DomainError):
            RepLabel(RepKind.PRINCIPAL_SERIES, 3)


class TestSymChar:
    """Test the symmetric power character recurrence."""

    def test_small_values(self):
        """Test S_0, S_1 and hand-computed values."""
        assert sym_char(0, 5, 7) == 1
        assert sym_char(1, 5, 7) == 5
        assert sym_char(2, 1, 1) == 0
        assert sym_char(10, 0, 1) == -1
        assert sym_char(10, 1, 1) == -1
        assert sym_char(10, 1, 2) == 23

    def test_identity_class(self):
        """Test S_k(2, 1) = k + 1 (character at the identity is the dimension)."""
        for k in range(12):
            assert sym_char(k, 2, 1) == k + 1

    def test_parity(self):
        """Test S_k(-t, n) = (-1)^k S_k(t, n)."""
        for k in range(15):
            for t in range(-4, 5):
                for n in (1, 2, 5, -3):
                    assert sym_char(k, -t, n) == (-1) ** k * sym_char(k, t, n)

    def test_exact_output(self):
        """Test results are Fractions."""
        assert isinstance(sym_char(6, Fraction(1, 3), 2), Fraction)

    def test_quadratic_inputs(self, golden):
        """Test evaluation over Q(sqrt(5)) commutes with conjugation."""
        for k in range(10):
            value = sym_char(k, golden, 1)
            assert isinstance(value, QuadElem)
            assert quad_conj(value) == sym_char(k, quad_conj(golden), 1)

    def test_negative_power(self):
        """Test k < 0 is rejected."""
        with pytest.raises(DomainError):
            sym_char(-1, 0, 1)

    def test_closed_form_numeric(self):
        """Test against (a^(k+1) - b^(k+1)) / (a - b) in floating point."""
        for t, n in [(0, 1), (1, 1), (1, 2), (3, 5), (-2, 7), (5, 3)]:
            alpha, beta = np.roots([1, -t, n]).astype(complex)
            for k in range(20):
                expected = (alpha ** (k + 1) - beta ** (k + 1)) / (alpha - beta)
                value = float(sym_char(k, t, n))
                assert abs(expected.imag) < 1e-6 * max(1.0, abs(expected.real))
                assert np.isclose(value, expected.real, rtol=1e-9, atol=1e-9)

    def test_rotation_closed_form(self):
        """Test S_k(2cos(theta), 1) = sin((k+1)theta) / sin(theta) for k <= 40."""
        for theta in np.arange(1, 16) / 10:
            # the float is converted exactly; only the comparison is inexact
            t = Fraction(float(2 * np.cos(theta)))
            for k in range(41):
                expected = np.sin((k + 1) * theta) / np.sin(theta)
                assert abs(float(sym_char(k, t, 1)) - expected) < 1e-9


class TestChKw:
    """Test characters of L_{k,w}."""

    def test_values(self):
        """Test normalization by the determinant twist."""
        assert ch_kw(10, 10, 0, 1) == -1
        assert ch_kw(2, 2, 1, 1) == 0
        assert ch_kw(2, 0, 3, 2) == Fraction(7, 2)
        assert ch_kw(0, 4, 1, 3) == 9
        assert ch_kw(10, 10, 2, 1) == 11
        assert ch_kw(2, 4, 3, 2) == 14

    def test_determinant_factor(self):
        """Test ch(k, w + 2) = n * ch(k, w)."""
        for k, w in ((2, 0), (3, 1), (10, 4), (6, 6)):
            for t, n in ((0, 1), (1, 2), (Fraction(1, 2), 3), (5, -2)):
                assert ch_kw(k, w + 2, t, n) == n * ch_kw(k, w, t, n)

    def test_parity_violation(self):
        """Test k and w must have the same parity."""
        with pytest.raises(AlgebraicityError):
            ch_kw(3, 2, 1, 1)

    def test_singular(self):
        """Test n = 0 is rejected."""
        with pytest.raises(DomainError):
            ch_kw(2, 2, 1, 0)

    def test_central_parity(self):
        """Test (-1)^k."""
        assert central_parity(12, 0) == 1
        assert central_parity(5, 1) == -1


class TestDiscreteSeries:
    """Test discrete series characters and pseudo-coefficient traces."""

    def test_elliptic_character(self):
        """Test D_m on elliptic classes is -S_{m-2}."""
        assert ds_char_elliptic(12, 0, 1) == 1
        assert ds_char_elliptic(4, 1, 1) == 0
        assert ds_char_elliptic(2, 0, 1) == -1
        with pytest.raises(DomainError):
            ds_char_elliptic(1, 0, 1)

    def test_induced_character_vanishes(self):
        """Test D_m + L_{m-2} cancel on elliptic classes."""
        for m in range(2, 20):
            for t, n in ((0, 1), (1, 1), (1, 3), (-2, 5)):
                assert ds_char_elliptic(m, t, n) + sym_char(m - 2, t, n) == 0

    def test_trace_table(self):
        """Test +1 on D_k, -1 on L_{k-2}, 0 elsewhere."""
        assert pseudo_coeff_trace(12, RepLabel.discrete_series(12)) == 1
        assert pseudo_coeff_trace(12, RepLabel.algebraic(10)) == -1
        assert pseudo_coeff_trace(12, RepLabel.discrete_series(14)) == 0
        assert pseudo_coeff_trace(12, RepLabel.algebraic(8)) == 0
        assert pseudo_coeff_trace(12, RepLabel.principal_series()) == 0

    def test_two_nonzero_labels(self):
        """Test exactly D_k and L_{k-2} have non-zero trace."""
        for k in (4, 12):
            labels = [RepLabel.principal_series()]
            labels += [RepLabel.discrete_series(n) for n in range(2, 30)]
            labels += [RepLabel.algebraic(n) for n in range(0, 30)]
            nonzero = [label for label in labels if pseudo_coeff_trace(k, label)]
            assert nonzero == [RepLabel.discrete_series(k), RepLabel.algebraic(k - 2)]

    def test_gl2_form(self):
        """Test the central exponent is checked."""
        assert pseudo_coeff_trace(4, RepLabel.discrete_series(4, w=0), w=0) == 1
        with pytest.raises(AlgebraicityError):
            pseudo_coeff_trace(4, RepLabel.discrete_series(4), w=1)
        with pytest.raises(DomainError):
            pseudo_coeff_trace(4, RepLabel.discrete_series(4, w=2), w=0)

    def test_isotypic(self):
        """Test the known isotypic traces and the open case."""
        assert isotypic_trace(12, 12) == 1
        assert isotypic_trace(12, 14) == 0
        with pytest.raises(UnsupportedScopeError):
            isotypic_trace(12, 10)
