"""
Homologia de Novikov de somas conexas, Hurewicz em janelas e o teste de
Mittag-Leffler para sistemas finitos.
"""
from .complexes import ChainComplex, homology, homology_groups, presentation_complex
from .novikov import NovikovModule, hn_connected_sum, novikov_inequality_bounds, tensor_novikov
from .hurewicz import (
    AbelianSystemWindow,
    LevelFamily,
    MLVerdict,
    hurewicz_map_word,
    ml_check,
    pro_abelianize,
)

__all__ = [
    'ChainComplex',
    'homology',
    'homology_groups',
    'presentation_complex',
    'NovikovModule',
    'tensor_novikov',
    'hn_connected_sum',
    'novikov_inequality_bounds',
    'AbelianSystemWindow',
    'LevelFamily',
    'MLVerdict',
    'hurewicz_map_word',
    'pro_abelianize',
    'ml_check',
]
