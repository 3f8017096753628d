"""
Grupos finitamente apresentados tornados efetivos: redução livre,
enumeração de classes laterais (Todd-Coxeter), abelianização por forma
normal de Smith, teste de ciclicidade e dim Hom(G, R).
"""
from .words import FreeWord, free_reduce
from .presentation import Presentation, parse_presentation, parse_word
from .matrices import IntMatrix, SNFResult, smith_normal_form, rank_over_rationals
from .abelian import AbelianGroup, AbelianizationMap, abelianization, dim_hom_R
from .tables import FiniteGroupTable, is_cyclic, min_generators, abelianization_map
from .todd_coxeter import todd_coxeter

__all__ = [
    'FreeWord',
    'free_reduce',
    'Presentation',
    'parse_presentation',
    'parse_word',
    'IntMatrix',
    'SNFResult',
    'smith_normal_form',
    'rank_over_rationals',
    'AbelianGroup',
    'AbelianizationMap',
    'abelianization',
    'dim_hom_R',
    'FiniteGroupTable',
    'is_cyclic',
    'min_generators',
    'abelianization_map',
    'todd_coxeter',
]
