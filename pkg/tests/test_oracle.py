"""
Tests for q-series, the level-one cusp form bases and exact Hecke matrices.
"""

from fractions import Fraction

import pytest
from sympy import Matrix, Rational, eye

from oracle import (
    QSeries,
    basis_exponents,
    charpoly,
    coordinates,
    cusp_basis,
    cusp_dimension,
    delta,
    eisenstein,
    hecke_matrix,
    oracle_trace,
    to_fraction,
    working_precision,
)
from config import ORACLE_EXTRA_PRECISION
from utils.exceptions import DomainError, ExactnessError, PrecisionError, UnsupportedScopeError

TAU = [0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]


class TestQSeries:
    """Test truncated series arithmetic."""

    def test_precision_guard(self):
        """Test coefficients beyond the known range are never read."""
        series = QSeries([1, 2, 3])
        assert series[2] == 3
        with pytest.raises(PrecisionError):
            series[3]
        with pytest.raises(PrecisionError):
            series.truncate(5)
        assert series.truncate(2).coeffs == (1, 2)

    def test_products_truncate(self):
        """Test (1 + q)^2 and mixed precisions."""
        one_plus_q = QSeries([1, 1, 0, 0])
        assert (one_plus_q * one_plus_q).coeffs == (1, 2, 1, 0)
        assert (one_plus_q * QSeries([1, 1])).prec == 2
        assert (one_plus_q ** 0) == QSeries.one(4)

    def test_shift_and_valuation(self):
        """Test multiplication by q^e."""
        series = QSeries([0, 0, 5]).shift(1)
        assert series.prec == 4
        assert series.valuation() == 3
        assert series.is_cuspidal()
        assert QSeries([0, 0]).valuation() is None

    def test_exact_coefficients(self):
        """Test floats are refused and scale stays exact."""
        assert QSeries([1, 2]).scale(Fraction(1, 3)).coeffs == (Fraction(1, 3), Fraction(2, 3))
        with pytest.raises(ExactnessError):
            QSeries([0.5])

    def test_immutable(self):
        """Test attributes cannot be set."""
        with pytest.raises(AttributeError):
            QSeries([1]).foo = 1

    def test_hecke_precision(self):
        """Test T_m shrinks precision to (prec - 1) // m + 1."""
        series = delta(21)
        assert series.hecke(2, 12).prec == 11
        assert series.hecke(3, 12).prec == 7
        with pytest.raises(DomainError):
            series.hecke(0, 12)


class TestModularForms:
    """Test E4, E6, Delta and the monomial bases."""

    def test_eisenstein(self):
        """Test the first coefficients of E4 and E6."""
        assert eisenstein(4, 4).coeffs == (1, 240, 2160, 6720)
        assert eisenstein(6, 3).coeffs == (1, -504, -16632)
        with pytest.raises(DomainError):
            eisenstein(8, 4)

    def test_delta(self):
        """Test tau(n) for n <= 10."""
        assert list(delta(11).coeffs) == TAU
        with pytest.raises(DomainError):
            delta(1)

    def test_delta_from_eisenstein(self):
        """Test E4^3 - E6^2 = 1728 Delta."""
        prec = 12
        lhs = eisenstein(4, prec) ** 3 - eisenstein(6, prec) ** 2
        assert lhs == delta(prec).scale(1728)

    def test_e8_is_e4_squared(self):
        """Test the q coefficient of E4^2 is 480."""
        assert (eisenstein(4, 3) ** 2).coeffs == (1, 480, 61920)

    def test_basis_exponents(self):
        """Test monomials for a few weights."""
        assert basis_exponents(12) == [(1, 0, 0)]
        assert basis_exponents(14) == []
        assert basis_exponents(24) == [(2, 0, 0), (1, 3, 0)]
        assert basis_exponents(26) == [(1, 2, 1)]
        assert basis_exponents(38) == [(2, 2, 1), (1, 5, 1)]

    def test_dimensions(self):
        """Test the basis size matches the closed-form dimension."""
        for k in range(4, 122, 2):
            assert len(basis_exponents(k)) == cusp_dimension(k), k

    def test_basis_is_triangular(self):
        """Test each basis element starts with q^a."""
        for k in (24, 36, 48):
            for (a, _, _), form in zip(basis_exponents(k), cusp_basis(k, 10)):
                assert form.valuation() == a
                assert form[a] == 1

    def test_weight_domain(self):
        """Test k = 2 is out of scope and odd weights are invalid."""
        with pytest.raises(UnsupportedScopeError):
            basis_exponents(2)
        with pytest.raises(DomainError):
            basis_exponents(7)
        with pytest.raises(DomainError):
            cusp_dimension(0)


class TestHeckeMatrix:
    """Test exact Hecke matrices."""

    def test_delta_eigenform(self):
        """Test T_2 Delta = -24 Delta."""
        assert delta(21).hecke(2, 12) == delta(21).scale(-24)
        assert hecke_matrix(12, 2) == Matrix([[-24]])

    def test_working_precision(self):
        """Test dim * (m + 1) + extra."""
        assert working_precision(24, 3) == 2 * 4 + ORACLE_EXTRA_PRECISION
        assert working_precision(14, 3) == ORACLE_EXTRA_PRECISION

    def test_trace(self):
        """Test known traces."""
        assert oracle_trace(24, 2) == 1080
        assert oracle_trace(12, 5) == 4830
        assert oracle_trace(14, 2) == 0
        assert oracle_trace(16, 1) == 1
        assert hecke_matrix(24, 1) == eye(2)
        assert isinstance(oracle_trace(24, 3), Fraction)

    def test_charpoly(self):
        """Test characteristic polynomials."""
        assert charpoly(12, 2) == [1, 24]
        assert charpoly(14, 2) == [1]
        assert charpoly(24, 2) == [1, -1080, -20468736]

    def test_commutativity(self):
        """Test T_2 T_3 = T_3 T_2 = T_6 for k <= 28."""
        for k in range(12, 30, 2):
            if cusp_dimension(k) == 0:
                continue
            t2, t3, t6 = hecke_matrix(k, 2), hecke_matrix(k, 3), hecke_matrix(k, 6)
            assert t2 * t3 == t3 * t2 == t6

    def test_prime_square_recursion(self):
        """Test T_{p^2} = T_p^2 - p^(k-1) I."""
        for k in (24, 28):
            dim = cusp_dimension(k)
            for p in (2, 3):
                expected = hecke_matrix(k, p) ** 2 - p ** (k - 1) * eye(dim)
                assert hecke_matrix(k, p * p) == expected

    def test_low_precision_rejected(self):
        """Test the coordinate solve refuses too few coefficients."""
        with pytest.raises(PrecisionError):
            hecke_matrix(24, 2, prec=3)

    def test_coordinates_outside_span(self):
        """Test a non-cusp form has no coordinates."""
        basis = cusp_basis(12, 10)
        with pytest.raises(PrecisionError):
            coordinates(eisenstein(4, 10), basis, [1])
        assert coordinates(delta(10).scale(3), basis, [1]) == [3]

    def test_to_fraction(self):
        """Test sympy rationals convert exactly."""
        assert to_fraction(Rational(-3, 4)) == Fraction(-3, 4)
        assert to_fraction(7) == 7
