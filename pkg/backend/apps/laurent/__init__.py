"""
Séries de Laurent formais truncadas sobre Z, Q e Z/n.

Cada valor carrega seu próprio grau de truncamento, o que modela o
sistema inverso Λ_d → Λ_{d'} (d' ≤ d) termo a termo.
"""
from .rings import CoefficientRing, Integers, Rationals, IntegersMod, ring_from_label
from .series import (
    LaurentSeries,
    lau_truncate,
    lau_arith,
    lau_invert,
    lau_valuation,
)
from .literal import parse_series, render_series

__all__ = [
    'CoefficientRing',
    'Integers',
    'Rationals',
    'IntegersMod',
    'ring_from_label',
    'LaurentSeries',
    'lau_truncate',
    'lau_arith',
    'lau_invert',
    'lau_valuation',
    'parse_series',
    'render_series',
]
