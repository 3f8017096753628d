"""
Experimento de refutação com um único gerador.

Para cada palavra candidata c (forma normal com níveis na janela), testa
por busca limitada se todas as letras de nível 0 de G estão no subgrupo
gerado por c a menos de DTC. A lista de sobreviventes vazia é uma
refutação limitada; não vazia é inconclusiva.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from django.conf import settings

from apps.core.exceptions import BudgetExceeded
from apps.fpgroup.tables import FiniteGroupTable
from apps.freeprod.literal import render_product_word
from apps.freeprod.product import Letter, ProductWord, Window

from .span import span_member_bounded
from .words import DtcGenerator

logger = logging.getLogger(__name__)

# Acima disso a busca ainda roda, mas o número de candidatas explode
RECOMMENDED_MAX_ORDER = 24


@dataclass(frozen=True)
class RefutationReport:
    group_order: int
    window: Window
    max_len: int
    candidates: int
    survivors: Tuple[ProductWord, ...] = field(default_factory=tuple)

    @property
    def refuted(self) -> bool:
        return not self.survivors

    def render(self) -> str:
        head = (
            f'single-generator search: order {self.group_order}, window {self.window}, '
            f'max_len {self.max_len}, {self.candidates} candidate(s)'
        )
        if self.refuted:
            return f'{head}\nno survivors (bounded refutation)'
        lines = [f'{head}', f'{len(self.survivors)} survivor(s) (inconclusive):']
        lines += [f'  {render_product_word(x)}' for x in self.survivors]
        return '\n'.join(lines)

    def to_dict(self) -> dict:
        return {
            'group_order': self.group_order,
            'window': str(self.window),
            'max_len': self.max_len,
            'candidates': self.candidates,
            'survivors': [render_product_word(x) for x in self.survivors],
            'refuted': self.refuted,
        }


def count_candidates(order: int, levels: int, max_len: int) -> int:
    """Formas normais não triviais de comprimento ≤ max_len com `levels` níveis."""
    total = 0
    for length in range(1, max_len + 1):
        total += levels * (levels - 1) ** (length - 1) * (order - 1) ** length
    return total


def enumerate_candidates(g: FiniteGroupTable, window: Window, max_len: int) -> Iterator[ProductWord]:
    """Por comprimento, depois em ordem lexicográfica de (nível, elemento)."""
    elements = [a for a in range(g.order) if a != g.identity]
    frontier: List[Tuple[Letter, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for letters in frontier:
            for level in window.levels():
                if letters and letters[-1].level == level:
                    continue
                for a in elements:
                    word = letters + (Letter(level, a),)
                    nxt.append(word)
                    yield ProductWord(g, word)
        frontier = nxt


def single_generator_refutation_search(
    g: FiniteGroupTable,
    window: Window,
    max_len: int,
    max_candidates: Optional[int] = None,
) -> RefutationReport:
    """
    Busca avaliada em h = window.lo, com palavras DTC de comprimento ≤ max_len.

    Raises:
        BudgetExceeded: mais candidatas que settings.NOVK_REFUTE_MAX_CANDIDATES
        ValueError: janela sem o nível 0 ou max_len < 1
    """
    if 0 not in window:
        raise ValueError(f'a janela {window} precisa conter o nível 0')
    if max_len < 1:
        raise ValueError(f'max_len deve ser positivo (recebido {max_len})')
    if max_candidates is None:
        max_candidates = getattr(settings, 'NOVK_REFUTE_MAX_CANDIDATES', 20000)
    if g.order > RECOMMENDED_MAX_ORDER:
        logger.warning(f'Refutação com grupo de ordem {g.order} (> {RECOMMENDED_MAX_ORDER})')

    total = count_candidates(g.order, len(window), max_len)
    if total > max_candidates:
        raise BudgetExceeded('refutação com um gerador (candidatas)', max_candidates, total)

    h = window.lo
    targets = [ProductWord(g, (Letter(0, a),)) for a in range(g.order) if a != g.identity]
    logger.info(f'Refutação: ordem {g.order}, janela {window}, max_len {max_len}, {total} candidatas')

    survivors = []
    for candidate in enumerate_candidates(g, window, max_len):
        gens = [DtcGenerator('c', candidate)]
        if all(span_member_bounded(t, gens, h, window, max_len).is_member for t in targets):
            logger.debug(f'Candidata sobrevivente: {render_product_word(candidate)}')
            survivors.append(candidate)

    logger.info(f'Refutação concluída: {len(survivors)} sobreviventes de {total}')
    return RefutationReport(g.order, window, max_len, total, tuple(survivors))
