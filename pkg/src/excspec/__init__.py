"""Exact-arithmetic models of the Burnside ring of the degree-d window,
its prime-ideal spectrum, the tensor-triangular spectrum of compact
degree-d objects (p-local, integral and rational-coefficient variants),
blueshift distances, and the resulting classification of thick
tensor-ideals by admissible threshold functions."""

from .combinat import INF, BudgetError, delta_p, mu_incl_excl, surjections
from .burnside import BurnsidePresentation, RingElement, present

__all__ = [
    "INF",
    "BudgetError",
    "delta_p",
    "mu_incl_excl",
    "surjections",
    "BurnsidePresentation",
    "RingElement",
    "present",
]
