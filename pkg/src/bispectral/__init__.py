"""Exact symbolic engine for trigonometric Baker-Akhiezer functions of
deformed Calogero-Moser-Sutherland configurations, their dual difference
operators of rational Macdonald type, and machine verification of the finite
identities they satisfy.  All arithmetic is exact over the rationals."""

from .basis import WeightedBasis, vec
from .element import (
    Element,
    directional_derivative,
    exact_divide,
    restrict_to_hyperplane,
    shift_substitute,
)
from .exppoly import ExpPoly
from .kpoly import KPoly
from .ratfun import RationalFn

__all__ = [
    "WeightedBasis",
    "vec",
    "Element",
    "ExpPoly",
    "KPoly",
    "RationalFn",
    "directional_derivative",
    "exact_divide",
    "restrict_to_hyperplane",
    "shift_substitute",
]
