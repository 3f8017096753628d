"""
Homologia de Novikov de somas conexas T^n ♯ X com a classe u da projeção no toro.

HN_0 = 0 e, para i = 1, 2 e n ≥ 4, HN_i = H_i(X) ⊗ Λ. Um somando Z/k de
H_i(X) vira Z/k((t)); um somando Z vira Λ = Z((t)).
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from apps.fpgroup.abelian import AbelianGroup

from .complexes import ChainComplex, homology
from .exceptions import HypothesisViolation, OutOfScope

logger = logging.getLogger(__name__)

MIN_DIMENSION = 4


@dataclass(frozen=True)
class NovikovModule:
    """Λ^free_rank ⊕ Z/t1((t)) ⊕ ... com a torção em ordem de divisibilidade."""

    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        # a validação de posto e torção é a mesma do grupo abeliano
        AbelianGroup(self.free_rank, self.torsion)
        object.__setattr__(self, 'torsion', tuple(int(t) for t in self.torsion))

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def render(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append('Z((t))')
        elif self.free_rank > 1:
            parts.append(f'Z((t))^{self.free_rank}')
        parts.extend(f'Z/{k}((t))' for k in self.torsion)
        return ' ⊕ '.join(parts) or '0'

    def to_dict(self) -> dict:
        return {'free_rank': self.free_rank, 'torsion': list(self.torsion), 'text': self.render()}

    def __str__(self):
        return self.render()


def tensor_novikov(h: AbelianGroup) -> NovikovModule:
    return NovikovModule(h.rank, h.torsion)


def hn_connected_sum(cx: ChainComplex, i: int, n: int) -> NovikovModule:
    """
    HN_i(T^n ♯ X, u) a partir do complexo celular de X.

    Raises:
        OutOfScope: i fora de {0, 1, 2}
        HypothesisViolation: n < 4
    """
    if i not in (0, 1, 2):
        raise OutOfScope(f'HN_{i} não é coberto pela fórmula (só i = 0, 1, 2)')
    if n < MIN_DIMENSION:
        raise HypothesisViolation(
            f'fórmula para T^n ♯ X exige n ≥ {MIN_DIMENSION} (recebido n = {n})'
        )
    if i == 0 or i > cx.top:
        # H_i(X) = 0 acima do topo do complexo
        return NovikovModule()
    module = tensor_novikov(homology(cx, i))
    logger.info(f'HN_{i}(T^{n} ♯ X) = {module}')
    return module


def novikov_inequality_bounds(modules: Sequence[NovikovModule]) -> List[int]:
    """
    Cota inferior de #Crit_i por grau: posto livre de HN_i mais o número de
    somandos de torção de HN_i e de HN_{i-1}.
    """
    bounds = []
    previous = 0
    for module in modules:
        q = len(module.torsion)
        bounds.append(module.free_rank + q + previous)
        previous = q
    return bounds
