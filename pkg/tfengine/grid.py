"""
Data-parallel evaluation of the trace engine over a (k, m) grid and
comparison with the spectral oracle.

Pairs fan out over a thread pool; results always come back in (k, m) order.
The only shared state is the idempotent class-number table.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from config import VERIFY_K_MAX, VERIFY_K_MIN, VERIFY_M_MAX, VERIFY_WORKERS
from exact import format_rational
from models import VerificationReport
from oracle import oracle_trace
from utils.logger import get_logger
from utils.exceptions import DomainError
from .trace_formula import TraceBreakdown, trace_cusp

logger = get_logger(__name__)


def grid_pairs(k_min: int, k_max: int, m_max: int) -> List[Tuple[int, int]]:
    """Even weights in [k_min, k_max] crossed with m in [1, m_max], in (k, m) order."""
    if k_min < 4 or k_max < k_min or m_max < 1:
        raise DomainError(
            "Grid needs 4 <= k_min <= k_max and m_max >= 1",
            details={"k_min": k_min, "k_max": k_max, "m_max": m_max}
        )
    first = k_min + (k_min % 2)
    return [(k, m) for k in range(first, k_max + 1, 2) for m in range(1, m_max + 1)]


def _map(function, pairs, workers: int):
    if workers <= 1:
        return [function(pair) for pair in pairs]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, pairs))


def evaluate_grid(
    k_min: int = VERIFY_K_MIN,
    k_max: int = VERIFY_K_MAX,
    m_max: int = VERIFY_M_MAX,
    workers: int = VERIFY_WORKERS,
) -> List[TraceBreakdown]:
    """trace_cusp on every grid pair, ordered by (k, m)."""
    pairs = grid_pairs(k_min, k_max, m_max)
    return _map(lambda pair: trace_cusp(*pair), pairs, workers)


def _compare(pair: Tuple[int, int]) -> Tuple[int, int, TraceBreakdown, object]:
    k, m = pair
    return k, m, trace_cusp(k, m), oracle_trace(k, m)


def verify_grid(
    k_min: int = VERIFY_K_MIN,
    k_max: int = VERIFY_K_MAX,
    m_max: int = VERIFY_M_MAX,
    workers: int = VERIFY_WORKERS,
) -> VerificationReport:
    """
    Compare trace_cusp(k, m).total with oracle_trace(k, m) on the whole grid.

    Returns:
        VerificationReport naming the first mismatch in (k, m) order, if any
    """
    pairs = grid_pairs(k_min, k_max, m_max)
    logger.info(
        "Verifying engine against oracle",
        extra={"k_min": k_min, "k_max": k_max, "m_max": m_max, "pairs": len(pairs), "workers": workers}
    )
    started = time.time()
    results = _map(_compare, pairs, workers)

    first_mismatch: Optional[dict] = None
    mismatches = 0
    for k, m, breakdown, expected in results:
        if breakdown.total == expected:
            continue
        mismatches += 1
        logger.warning(
            "Engine and oracle disagree at k=%d m=%d: %s != %s",
            k, m, format_rational(breakdown.total), format_rational(expected)
        )
        if first_mismatch is None:
            first_mismatch = {
                "k": k,
                "m": m,
                "engine": format_rational(breakdown.total),
                "oracle": format_rational(expected),
            }

    elapsed = time.time() - started
    logger.info(
        "Verification finished: %d pairs, %d mismatches in %.2fs",
        len(pairs), mismatches, elapsed,
        extra={"pairs": len(pairs), "mismatches": mismatches}
    )
    return VerificationReport(
        k_min=k_min,
        k_max=k_max,
        m_max=m_max,
        checked=len(pairs),
        passed=first_mismatch is None,
        first_mismatch=first_mismatch,
    )
