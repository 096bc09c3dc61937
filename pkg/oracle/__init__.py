"""
Spectral oracle: q-expansions, cusp form bases and exact Hecke matrices at level one.
"""

from .qseries import QSeries
from .modular_forms import (
    eisenstein,
    delta,
    basis_exponents,
    cusp_basis,
    cusp_dimension,
)
from .hecke import (
    working_precision,
    coordinates,
    hecke_matrix,
    to_fraction,
    oracle_trace,
    charpoly,
)

__all__ = [
    "QSeries",
    "eisenstein",
    "delta",
    "basis_exponents",
    "cusp_basis",
    "cusp_dimension",
    "working_precision",
    "coordinates",
    "hecke_matrix",
    "to_fraction",
    "oracle_trace",
    "charpoly",
]
