"""
Sigma-conjugation of weights, Hecke data and values, with the suites that
check the trace identity, orbital equivariance and eigensystem permutation.
"""

from .sigma import (
    SigmaAction,
    galois_group,
    conjugate_weight,
    conjugate_hecke,
    weight_orbit,
)
from .suites import (
    trace_identity_suite,
    hilbert_orbital_suite,
    eigensystem_orbit_check,
    eigensystem_suite,
)

__all__ = [
    "SigmaAction",
    "galois_group",
    "conjugate_weight",
    "conjugate_hecke",
    "weight_orbit",
    "trace_identity_suite",
    "hilbert_orbital_suite",
    "eigensystem_orbit_check",
    "eigensystem_suite",
]
