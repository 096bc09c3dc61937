"""
Trace engine: identity, elliptic and hyperbolic distributions summing to the
trace of T_m on level-one cusp forms.
"""

from .trace_formula import (
    HeckeDatum,
    TraceBreakdown,
    elliptic_term,
    identity_term,
    hyperbolic_term,
    trace_cusp,
    trace_of,
    elliptic_term_via_orbital,
    folded_elliptic_term,
)
from .grid import grid_pairs, evaluate_grid, verify_grid

__all__ = [
    "HeckeDatum",
    "TraceBreakdown",
    "elliptic_term",
    "identity_term",
    "hyperbolic_term",
    "trace_cusp",
    "trace_of",
    "elliptic_term_via_orbital",
    "folded_elliptic_term",
    "grid_pairs",
    "evaluate_grid",
    "verify_grid",
]
