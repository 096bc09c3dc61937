"""
Tests for the geometric trace engine and grid verification.
"""

from fractions import Fraction

import pytest

from tfengine import (
    HeckeDatum,
    TraceBreakdown,
    elliptic_term,
    elliptic_term_via_orbital,
    evaluate_grid,
    folded_elliptic_term,
    grid_pairs,
    hyperbolic_term,
    identity_term,
    trace_cusp,
    trace_of,
    verify_grid,
)
from oracle import cusp_basis, cusp_dimension, delta, hecke_matrix, to_fraction
from utils.exceptions import DomainError, ExactnessError, UnsupportedScopeError


class TestTraceCusp:
    """Test exact traces of T_m on S_k."""

    def test_weight_12_m_2(self):
        """Test the breakdown 0 / -23 / -1 / -24."""
        breakdown = trace_cusp(12, 2)
        assert breakdown.identity == 0
        assert breakdown.elliptic == -23
        assert breakdown.hyperbolic == -1
        assert breakdown.total == -24

    def test_weight_12_m_1(self):
        """Test the trace of T_1 is dim S_12 = 1."""
        breakdown = trace_cusp(12, 1)
        assert breakdown.identity == Fraction(11, 12)
        assert breakdown.total == 1

    def test_ramanujan_tau(self):
        """Test trace of T_m on S_12 is the q^m coefficient of Delta."""
        tau = delta(12)
        for m in range(1, 12):
            assert trace_cusp(12, m).total == tau[m], m

    def test_weight_4_vanishes(self):
        """Test S_4 = 0 so every trace is 0."""
        for m in range(1, 16):
            assert trace_cusp(4, m).total == 0

    def test_dimension_one_weights(self):
        """Test a_2 and a_3 of the single basis form when dim S_k = 1."""
        for k in (12, 16, 18, 20, 22, 26):
            (form,) = cusp_basis(k, 4)
            assert trace_cusp(k, 2).total == form[2], k
            assert trace_cusp(k, 3).total == form[3], k

    def test_weight_24(self):
        """Test the two-dimensional S_24: trace T_2 = 1080."""
        assert trace_cusp(24, 1).total == 2
        assert trace_cusp(24, 2).total == 1080

    def test_dimension_recovery(self):
        """Test trace of T_1 is the length of the cusp basis for k <= 60."""
        for k in range(4, 62, 2):
            assert trace_cusp(k, 1).total == len(cusp_basis(k, 20)), k

    def test_prime_square_recursion(self):
        """Test tr T_{p^2} = tr(T_p^2) - p^(k-1) dim S_k for p <= 7."""
        for k in (12, 24):
            for p in (2, 3, 5, 7):
                t_p = hecke_matrix(k, p)
                expected = to_fraction((t_p * t_p).trace()) - p ** (k - 1) * cusp_dimension(k)
                assert trace_cusp(k, p * p).total == expected

    def test_totals_are_integers(self):
        """Test the rational breakdown always sums to an integer."""
        for k in (4, 10, 12, 14, 24, 30):
            for m in range(1, 13):
                assert trace_cusp(k, m).total.denominator == 1

    def test_weight_domain(self):
        """Test weight 2, odd weights and small m are rejected."""
        with pytest.raises(UnsupportedScopeError):
            trace_cusp(2, 1)
        with pytest.raises(DomainError):
            trace_cusp(5, 1)
        with pytest.raises(DomainError):
            trace_cusp(0, 1)
        with pytest.raises(DomainError):
            trace_cusp(12, 0)

    def test_to_record(self):
        """Test the breakdown renders as a trace record."""
        record = trace_cusp(12, 2).to_record()
        assert record.kind == "trace"
        assert (record.identity, record.elliptic, record.hyperbolic, record.total) == ("0", "-23", "-1", "-24")


class TestTerms:
    """Test the individual distributions."""

    def test_identity_only_for_squares(self):
        """Test the identity term vanishes off squares."""
        for m in (2, 3, 5, 6, 7, 8):
            assert identity_term(12, m) == 0
        assert identity_term(12, 4) == Fraction(11, 12) * 4 ** 5
        assert identity_term(6, 9) == Fraction(5, 12) * 9 ** 2

    def test_elliptic(self):
        """Test hand-computed elliptic sums."""
        assert elliptic_term(12, 1) == Fraction(7, 12)
        assert elliptic_term(12, 2) == -23
        assert elliptic_term(4, 1) == Fraction(1, 4)

    def test_hyperbolic(self):
        """Test -1/2 sum of min(d, m/d)^(k-1)."""
        assert hyperbolic_term(12, 1) == Fraction(-1, 2)
        assert hyperbolic_term(12, 4) == -Fraction(1 + 2 ** 11 + 1, 2)
        assert hyperbolic_term(4, 6) == -Fraction(1 + 8 + 8 + 1, 2)

    def test_elliptic_via_orbital(self):
        """Test the orbital-integral route agrees with the direct sum."""
        for k in (4, 12, 18, 24):
            for m in range(1, 11):
                assert elliptic_term_via_orbital(k, m) == elliptic_term(k, m)

    def test_folded_identity(self):
        """Test the H(0) boundary classes reproduce the identity term."""
        for k in (4, 12, 20):
            for m in (1, 4, 9, 16):
                assert folded_elliptic_term(k, m) == identity_term(k, m) + elliptic_term(k, m)
            assert folded_elliptic_term(k, 3) == elliptic_term(k, 3)


class TestBreakdown:
    """Test TraceBreakdown invariants."""

    def test_floats_rejected(self):
        """Test inexact components are refused."""
        with pytest.raises(ExactnessError):
            TraceBreakdown(12, 2, 0.0, Fraction(-23), Fraction(-1), Fraction(-24))

    def test_sum_enforced(self):
        """Test total must be the sum of the three terms."""
        with pytest.raises(DomainError):
            TraceBreakdown(12, 2, Fraction(0), Fraction(-23), Fraction(-1), Fraction(-25))

    def test_identity_requires_square(self):
        """Test a non-zero identity term at non-square m is refused."""
        with pytest.raises(DomainError):
            TraceBreakdown(12, 2, Fraction(1), Fraction(0), Fraction(0), Fraction(1))


class TestHeckeDatum:
    """Test the test-function wrapper."""

    def test_rational_datum(self):
        """Test trace_of agrees with trace_cusp."""
        datum = HeckeDatum(3)
        assert str(datum) == "T_3"
        assert trace_of(12, datum) == trace_cusp(12, 3)

    def test_non_rational_rejected(self):
        """Test only rational-valued data are in scope."""
        with pytest.raises(UnsupportedScopeError):
            HeckeDatum(2, value_field="Q(sqrt(5))")
        with pytest.raises(DomainError):
            HeckeDatum(0)


class TestGrid:
    """Test grid evaluation and engine-vs-oracle verification."""

    def test_pairs(self):
        """Test even weights and (k, m) order."""
        assert grid_pairs(4, 8, 2) == [(4, 1), (4, 2), (6, 1), (6, 2), (8, 1), (8, 2)]
        assert grid_pairs(5, 8, 1) == [(6, 1), (8, 1)]
        with pytest.raises(DomainError):
            grid_pairs(2, 8, 1)
        with pytest.raises(DomainError):
            grid_pairs(8, 4, 1)

    def test_parallel_order(self):
        """Test worker threads keep results in grid order."""
        sequential = evaluate_grid(4, 16, 6, workers=1)
        parallel = evaluate_grid(4, 16, 6, workers=4)
        assert [(b.k, b.m) for b in parallel] == grid_pairs(4, 16, 6)
        assert parallel == sequential

    def test_small_verification(self):
        """Test engine and oracle agree on a small grid."""
        report = verify_grid(4, 24, 6, workers=2)
        assert report.passed
        assert report.checked == len(grid_pairs(4, 24, 6))
        assert report.first_mismatch is None

    @pytest.mark.slow
    def test_full_verification(self):
        """Test engine and oracle agree for k <= 30 and m <= 30."""
        report = verify_grid(4, 30, 30, workers=4)
        assert report.passed, report.first_mismatch
