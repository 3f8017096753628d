"""
Enumeração de classes laterais de Todd-Coxeter sobre o subgrupo trivial.

A enumeração é a HLT de `sympy.combinatorics.fp_groups`. O limite conta
classes vivas: quando o sympy esgota o espaço, uma passada de lookahead
(varredura sem novas definições) tenta liberar classes e a enumeração é
retomada da tabela parcial. Sem ganho, a enumeração desiste.
"""
import logging
from typing import List, Optional

from django.conf import settings
from sympy.combinatorics.coset_table import CosetTable, coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup

from .exceptions import CosetLimitExceeded
from .presentation import Presentation
from .tables import FiniteGroupTable
from .words import free_group_of_rank, to_free_element

logger = logging.getLogger(__name__)


def fp_group(p: Presentation) -> FpGroup:
    """A apresentação como FpGroup do sympy, geradores x0..x{n-1}."""
    free = free_group_of_rank(p.ngens)
    relators = [to_free_element(r, free) for r in p.relators if not r.is_empty]
    return FpGroup(free, relators)


def _live(table: CosetTable) -> int:
    return len(table.omega)


def enumerate_cosets(group: FpGroup, max_cosets: int) -> CosetTable:
    """
    HLT com no máximo `max_cosets` classes vivas.

    Raises:
        CosetLimitExceeded: o lookahead não liberou espaço
    """
    table = None
    space = max_cosets
    while True:
        table = coset_enumeration_r(group, [], max_cosets=space, draft=table, incomplete=True)
        if table.is_complete():
            return table

        before = _live(table)
        table.look_ahead()
        after = _live(table)
        logger.debug(f'Lookahead: {before} -> {after} classes vivas')
        if after >= max_cosets:
            raise CosetLimitExceeded(max_cosets)
        # classes mortas continuam ocupando linhas da tabela
        space = len(table.table) + (max_cosets - after)


def generator_action(table: CosetTable, ngens: int) -> List[List[int]]:
    """Ação à direita c · g_i sobre a tabela compactada e padronizada."""
    table.compress()
    table.standardize()
    return [[row[2 * i] for i in range(ngens)] for row in table.table]


def todd_coxeter(p: Presentation, max_cosets: Optional[int] = None) -> FiniteGroupTable:
    """
    Realiza G = <X | R> como tabela de multiplicação finita.

    Args:
        p: apresentação
        max_cosets: limite de classes vivas; padrão settings.NOVK_MAX_COSETS

    Raises:
        CosetLimitExceeded: a enumeração não fechou dentro do limite
    """
    if max_cosets is None:
        max_cosets = getattr(settings, 'NOVK_MAX_COSETS', 100000)
    if max_cosets < 1:
        raise ValueError(f'max_cosets deve ser >= 1 (recebido {max_cosets})')

    logger.info(f'Todd-Coxeter: {p.ngens} geradores, {len(p.relators)} relatores, limite {max_cosets}')
    if p.ngens == 0:
        return FiniteGroupTable.from_generator_action([[]], p)

    table = enumerate_cosets(fp_group(p), max_cosets)
    defined = len(table.table)
    group = FiniteGroupTable.from_generator_action(generator_action(table, p.ngens), p)
    logger.info(f'Todd-Coxeter concluído: ordem {group.order} ({defined} classes definidas)')
    return group
