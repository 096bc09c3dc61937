"""
Characters of GL2(R): symmetric powers, algebraic representations, discrete
series on elliptic classes and the pseudo-coefficient trace table.
"""

from .weights import WeightVector, RepKind, RepLabel
from .characters import (
    sym_char,
    ch_kw,
    ds_char_elliptic,
    pseudo_coeff_trace,
    isotypic_trace,
    central_parity,
)

__all__ = [
    "WeightVector",
    "RepKind",
    "RepLabel",
    "sym_char",
    "ch_kw",
    "ds_char_elliptic",
    "pseudo_coeff_trace",
    "isotypic_trace",
    "central_parity",
]
