"""
Verification suites for the sigma-conjugation statements.

Each suite returns a SuiteReport; failures are collected and logged rather
than raised, except for floating values reaching the exact path, which abort
the audit.

Eigenvectors over Q(sqrt(D0)) have QuadElem entries, which sympy matrices do
not carry; Hecke matrices are converted to Fraction rows for those products.
"""

import random
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from chars import WeightVector
from config import (
    EIGENSYSTEM_M_MAX,
    HILBERT_FIELDS,
    HILBERT_SAMPLES,
    HILBERT_WEIGHTS,
    SUITE_SEED,
    VANISHING_SAMPLES,
)
from exact import QuadElem, format_quad, format_rational, is_exact, is_rational_value, quad_conj, quad_sqrt
from models import SuiteReport
from oracle import charpoly, cusp_dimension, hecke_matrix, to_fraction
from orbital import (
    arch_orbital,
    orbital_pair,
    random_totally_elliptic,
    random_vanishing,
)
from tfengine import HeckeDatum, trace_cusp, trace_of
from utils.logger import get_logger
from utils.exceptions import DomainError, ExactnessError, UnsupportedScopeError
from .sigma import SigmaAction, conjugate_hecke, conjugate_weight

logger = get_logger(__name__)


def _render(value) -> str:
    return format_quad(value) if isinstance(value, QuadElem) else format_rational(value)


def _summarize(report: SuiteReport) -> SuiteReport:
    if report.passed:
        logger.info("Suite %s passed (%d checks)", report.suite, report.checked)
    else:
        logger.warning(
            "Suite %s failed: %d of %d checks",
            report.suite, len(report.failures), report.checked,
            extra={"suite": report.suite, "failures": report.failures[:5]}
        )
    return report


# ============================================================================
# Rational traces
# ============================================================================

def trace_identity_suite(k_list: Iterable[int], m_list: Iterable[int]) -> SuiteReport:
    """
    sigma(tr T_m | S_k) = tr(sigma T_m | S_{sigma k}) over Q, term by term.

    Every breakdown field must be an exact rational fixed by sigma, and the
    trace recomputed at the conjugated weight and Hecke datum must agree.

    Raises:
        ExactnessError: If a non-exact value shows up in a breakdown
    """
    sigma = SigmaAction.identity()
    failures: List[str] = []
    checked = 0
    k_list, m_list = list(k_list), list(m_list)
    for k in k_list:
        conjugated_k = conjugate_weight(WeightVector((k,), 0), sigma).k[0]
        for m in m_list:
            breakdown = trace_cusp(k, m)
            for name, value in breakdown.terms().items():
                if not is_exact(value) or not isinstance(value, Fraction):
                    raise ExactnessError(
                        "Non-exact value in trace breakdown",
                        details={"k": k, "m": m, "term": name, "type": type(value).__name__}
                    )
                checked += 1
                if not is_rational_value(value) or sigma.apply(value) != value:
                    failures.append(f"k={k} m={m} {name} not fixed by sigma")
            conjugated = trace_of(conjugated_k, conjugate_hecke(HeckeDatum(m), sigma))
            checked += 1
            if sigma.apply(breakdown.total) != conjugated.total:
                failures.append(f"k={k} m={m} trace identity fails")
    return _summarize(SuiteReport(
        suite="rational-traces",
        passed=not failures,
        checked=checked,
        failures=failures,
        details={"k_list": k_list, "m_list": m_list},
    ))


# ============================================================================
# Hilbert-layer orbital integrals
# ============================================================================

def _weight_vector(weights: Tuple[int, int]) -> WeightVector:
    return WeightVector(tuple(weights), weights[0] % 2)


def hilbert_orbital_suite(
    fields: Sequence[int] = tuple(HILBERT_FIELDS),
    weights: Sequence[Tuple[int, int]] = tuple(HILBERT_WEIGHTS),
    samples: int = HILBERT_SAMPLES,
    vanishing_samples: int = VANISHING_SAMPLES,
    seed: int = SUITE_SEED,
) -> SuiteReport:
    """
    Weight-conjugation equivariance of archimedean orbital integrals over
    real quadratic fields, plus exact vanishing off the totally elliptic
    totally positive locus.

    For each field and weight, `samples` random totally elliptic totally
    positive elements are checked; for each field, `vanishing_samples`
    hyperbolic or negative-determinant elements must give exactly 0.
    """
    rng = random.Random(seed)
    failures: List[str] = []
    counts: Dict[str, Dict[str, int]] = {}
    checked = 0
    for d in fields:
        per_field = {"equivariance": 0, "vanishing": 0}
        for pair in weights:
            kw = _weight_vector(pair)
            for _ in range(samples):
                gamma = random_totally_elliptic(d, rng)
                result = orbital_pair(gamma, kw)
                checked += 1
                per_field["equivariance"] += 1
                if not result.equivariant:
                    failures.append(
                        f"d={d} k={pair}: sigma(I)={_render(quad_conj(result.original))} "
                        f"!= I'={_render(result.conjugate_weight)}"
                    )
        vanishing_kw = _weight_vector(weights[0])
        for _ in range(vanishing_samples):
            gamma = random_vanishing(d, rng)
            value = arch_orbital(gamma, vanishing_kw)
            partner = arch_orbital(gamma, conjugate_weight(vanishing_kw, SigmaAction.nontrivial(d)))
            checked += 1
            per_field["vanishing"] += 1
            if value != 0 or partner != 0:
                failures.append(f"d={d}: vanishing fails with I={_render(value)}")
        counts[str(d)] = per_field
    return _summarize(SuiteReport(
        suite="hilbert-orbital",
        passed=not failures,
        checked=checked,
        failures=failures,
        details={"seed": seed, "per_field": counts, "weights": [list(pair) for pair in weights]},
    ))


# ============================================================================
# Eigensystems
# ============================================================================

def _fraction_matrix(k: int, m: int) -> List[List[Fraction]]:
    matrix = hecke_matrix(k, m)
    return [[to_fraction(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def _apply(matrix: List[List[Fraction]], vector: Sequence) -> List:
    return [row[0] * vector[0] + row[1] * vector[1] for row in matrix]


def _eigenvalue(matrix: List[List[Fraction]], vector: Sequence):
    """mu with matrix * vector = mu * vector, or None if vector is not an eigenvector."""
    image = _apply(matrix, vector)
    index = 0 if vector[0] != 0 else 1
    mu = image[index] / vector[index]
    if any(image[i] != mu * vector[i] for i in range(2)):
        return None
    return mu


def _eigenvector(matrix: List[List[Fraction]], eigenvalue) -> Tuple:
    (a, b), (c, e) = matrix
    if b != 0:
        return (b, eigenvalue - a)
    if c != 0:
        return (eigenvalue - e, c)
    raise DomainError("T_2 is scalar on this space; eigensystems are not separated")


def _field_name(value) -> str:
    return f"Q(sqrt({value.d}))" if isinstance(value, QuadElem) else "Q"


def eigensystem_orbit_check(k: int, m_max: int = EIGENSYSTEM_M_MAX) -> SuiteReport:
    """
    Check that sigma permutes the Hecke eigensystems of S_k.

    One-dimensional spaces carry a single rational system. In dimension two
    the roots of the T_2 characteristic polynomial give two systems; when
    the discriminant is not a square they must be exchanged by conjugation
    for every T_m with m <= m_max.

    Raises:
        UnsupportedScopeError: If dim S_k is not 1 or 2
    """
    dimension = cusp_dimension(k)
    if dimension not in (1, 2):
        raise UnsupportedScopeError(
            "Eigensystem orbits are supported for dim S_k in {1, 2}",
            details={"k": k, "dimension": dimension}
        )
    failures: List[str] = []
    checked = 0
    details: Dict[str, object] = {"k": k, "dimension": dimension, "m_max": m_max}

    if dimension == 1:
        eigenvalues = []
        for m in range(1, m_max + 1):
            a_m = _fraction_matrix(k, m)[0][0]
            checked += 1
            if a_m.denominator != 1 or quad_conj(a_m) != a_m:
                failures.append(f"a_{m} = {format_rational(a_m)} is not a sigma-fixed integer")
            eigenvalues.append(format_rational(a_m))
        details.update({"orbit_size": 1, "field": "Q", "eigenvalues": [eigenvalues]})
        return _summarize(SuiteReport(
            suite="eigensystems", passed=not failures, checked=checked, failures=failures, details=details,
        ))

    coefficients = charpoly(k, 2)
    checked += 1
    if len(coefficients) != 3 or coefficients[0] != 1:
        failures.append(f"charpoly(T_2) is not a monic quadratic: {coefficients}")
    _, p, q = coefficients
    discriminant = p * p - 4 * q
    root = quad_sqrt(discriminant)
    lam = (-p + root) / 2
    lam_bar = quad_conj(lam)
    irreducible = isinstance(root, QuadElem)
    details.update({
        "charpoly": coefficients,
        "discriminant": discriminant,
        "field": _field_name(lam),
        "orbit_size": 2 if irreducible else 1,
    })

    t2 = _fraction_matrix(k, 2)
    vector = _eigenvector(t2, lam)
    vector_bar = tuple(quad_conj(x) for x in vector) if irreducible else _eigenvector(t2, lam_bar)
    systems: Tuple[List[str], List[str]] = ([], [])
    for m in range(1, m_max + 1):
        matrix = _fraction_matrix(k, m)
        mu = _eigenvalue(matrix, vector)
        mu_bar = _eigenvalue(matrix, vector_bar)
        checked += 1
        if mu is None or mu_bar is None:
            failures.append(f"T_{m} does not preserve the T_2 eigenlines")
            continue
        if irreducible and quad_conj(mu) != mu_bar:
            failures.append(f"T_{m}: eigenvalues {_render(mu)} and {_render(mu_bar)} are not conjugate")
        # tr and det of T_m are the symmetric functions of the two eigenvalues
        trace = matrix[0][0] + matrix[1][1]
        det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
        if mu + mu_bar != trace or mu * mu_bar != det:
            failures.append(f"T_{m}: eigenvalues do not match trace and determinant")
        systems[0].append(_render(mu))
        systems[1].append(_render(mu_bar))
    details["eigenvalues"] = [systems[0], systems[1]]
    return _summarize(SuiteReport(
        suite="eigensystems", passed=not failures, checked=checked, failures=failures, details=details,
    ))


def eigensystem_suite(k_list: Iterable[int], m_max: int = EIGENSYSTEM_M_MAX) -> SuiteReport:
    """eigensystem_orbit_check over several weights, folded into one report."""
    failures: List[str] = []
    checked = 0
    per_weight: Dict[str, object] = {}
    for k in k_list:
        report = eigensystem_orbit_check(k, m_max)
        checked += report.checked
        failures.extend(f"k={k}: {failure}" for failure in report.failures)
        per_weight[str(k)] = {
            "orbit_size": report.details["orbit_size"],
            "field": report.details["field"],
        }
    return _summarize(SuiteReport(
        suite="eigensystems", passed=not failures, checked=checked, failures=failures,
        details={"per_weight": per_weight, "m_max": m_max},
    ))
