"""
Busca limitada de pertinência ao subgrupo gerado a menos de DTC.

Busca em largura sobre palavras de fatores ±1 com translações dentro da
janela. Ordem de exploração: translação crescente, depois a ordem dos
geradores, e +1 antes de -1. Estados repetidos (mesma imagem em Π_h) não
são expandidos de novo, então a primeira testemunha encontrada é a
menor nessa ordem.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from django.conf import settings

from apps.freeprod.product import ProductWord, Window, pw_mul, pw_zip

from .words import DtcGenerator, DtcWord, Factor, eval_dtc_word, eval_factor, generator_index, render_dtc_word

logger = logging.getLogger(__name__)

MEMBER = 'member'
UNKNOWN = 'unknown'


@dataclass(frozen=True)
class SpanResult:
    """
    Resultado da busca. `unknown` não prova não pertinência, exceto quando
    `exhausted` indica que todos os estados alcançáveis na janela foram vistos.
    """

    status: str
    witness: Optional[DtcWord] = None
    exhausted: bool = False
    explored: int = 0

    @property
    def is_member(self) -> bool:
        return self.status == MEMBER

    def to_dict(self) -> dict:
        return {
            'status': self.status,
            'witness': render_dtc_word(self.witness) if self.witness is not None else None,
            'exhausted': self.exhausted,
            'explored': self.explored,
        }


def _moves(gens: Sequence[DtcGenerator], h: int, window: Window) -> List[Tuple[Factor, ProductWord]]:
    moves = []
    for shift in window.levels():
        for gen in gens:
            for exp in (1, -1):
                piece = eval_factor(gen, shift, exp, h)
                if not piece.is_identity:
                    moves.append((Factor(shift, gen.id, exp), piece))
    return moves


def span_member_bounded(
    target: ProductWord,
    gens: Sequence[DtcGenerator],
    h: int,
    window: Window,
    max_len: int,
    max_states: Optional[int] = None,
) -> SpanResult:
    """
    Procura uma palavra DTC de comprimento ≤ max_len cuja avaliação em Π_h
    seja pw_zip(target, h).

    A testemunha devolvida é sempre reavaliada antes do retorno.

    Args:
        max_states: orçamento de estados distintos; padrão settings.NOVK_SPAN_MAX_STATES
    """
    if h not in window:
        raise ValueError(f'nível {h} fora da janela {window}')
    if max_len < 1:
        raise ValueError(f'max_len deve ser positivo (recebido {max_len})')
    if max_states is None:
        max_states = getattr(settings, 'NOVK_SPAN_MAX_STATES', 200000)
    generator_index(gens)

    goal = pw_zip(target, h)
    identity = ProductWord(target.group)
    if goal.is_identity:
        return SpanResult(MEMBER, DtcWord(), explored=1)

    moves = _moves(gens, h, window)
    parent: Dict[ProductWord, Tuple[Optional[ProductWord], Optional[Factor]]] = {identity: (None, None)}
    frontier = deque([identity])
    found = None

    for _ in range(max_len):
        next_frontier = deque()
        while frontier and found is None:
            state = frontier.popleft()
            for factor, piece in moves:
                nxt = pw_mul(state, piece)
                if nxt in parent:
                    continue
                parent[nxt] = (state, factor)
                if nxt == goal:
                    found = nxt
                    break
                if len(parent) >= max_states:
                    logger.warning(f'Busca de span interrompida: {len(parent)} estados (orçamento {max_states})')
                    return SpanResult(UNKNOWN, explored=len(parent))
                next_frontier.append(nxt)
        if found is not None or not next_frontier:
            break
        frontier = next_frontier

    if found is None:
        exhausted = not next_frontier
        logger.debug(f'Span: alvo não encontrado ({len(parent)} estados, esgotado={exhausted})')
        return SpanResult(UNKNOWN, exhausted=exhausted, explored=len(parent))

    factors = []
    state = found
    while parent[state][0] is not None:
        state, factor = parent[state]
        factors.append(factor)
    witness = DtcWord(tuple(reversed(factors))).compact()

    if eval_dtc_word(witness, gens, h) != goal:
        raise ArithmeticError('testemunha não reproduz o alvo')
    return SpanResult(MEMBER, witness, explored=len(parent))
