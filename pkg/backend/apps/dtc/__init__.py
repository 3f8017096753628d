"""
Geradores e relações a menos de translações de deck e completamento:
avaliação de palavras, pertinência limitada, matriz ρ e cotas de μ_DTC/ρ_DTC.
"""
from .words import DtcGenerator, DtcWord, Factor, eval_dtc_word, parse_dtc_word, render_dtc_word
from .span import SpanResult, span_member_bounded
from .rho import RhoMatrix, build_rho_matrix, l_lambda_dim, level_zero_relations, rank_over_laurent_field
from .bounds import BoundReport, critical_point_bounds, mu_dtc_bounds, rho_dtc_bounds
from .refutation import RefutationReport, single_generator_refutation_search

__all__ = [
    'DtcGenerator',
    'DtcWord',
    'Factor',
    'eval_dtc_word',
    'parse_dtc_word',
    'render_dtc_word',
    'SpanResult',
    'span_member_bounded',
    'RhoMatrix',
    'build_rho_matrix',
    'rank_over_laurent_field',
    'l_lambda_dim',
    'level_zero_relations',
    'BoundReport',
    'mu_dtc_bounds',
    'rho_dtc_bounds',
    'critical_point_bounds',
    'RefutationReport',
    'single_generator_refutation_search',
]
