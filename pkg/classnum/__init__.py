"""
Hurwitz class numbers through reduced binary quadratic forms.
"""

from .forms import (
    ReducedForm,
    reduced_forms,
    reduce_form,
    classes_by_reduction,
    hurwitz_by_reduction,
)
from .hurwitz import (
    H_ZERO,
    HurwitzTable,
    ClassNumberRelation,
    hurwitz,
    class_number_relation,
)

__all__ = [
    "ReducedForm",
    "reduced_forms",
    "reduce_form",
    "classes_by_reduction",
    "hurwitz_by_reduction",
    "H_ZERO",
    "HurwitzTable",
    "ClassNumberRelation",
    "hurwitz",
    "class_number_relation",
]
