"""
Complexos de cadeias celulares finitos e sua homologia inteira.

Convenção: boundaries[k-1] é a matriz de ∂_k : C_k → C_{k-1}, com linhas
indexadas pela base de C_{k-1} e colunas pela base de C_k.
"""
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from apps.fpgroup.abelian import AbelianGroup
from apps.fpgroup.matrices import IntMatrix, smith_normal_form
from apps.fpgroup.presentation import Presentation

from .exceptions import ChainComplexError, DegreeOutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainComplex:
    dims: Tuple[int, ...]
    boundaries: Tuple[IntMatrix, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'dims', tuple(int(d) for d in self.dims))
        object.__setattr__(self, 'boundaries', tuple(self.boundaries))
        if not self.dims:
            raise ChainComplexError('complexo sem nenhum grau')
        for k, d in enumerate(self.dims):
            if d < 0:
                raise ChainComplexError(f'dimensão negativa {d}', k)
        if len(self.boundaries) != len(self.dims) - 1:
            raise ChainComplexError(
                f'{len(self.boundaries)} bordos para {len(self.dims)} graus (esperado {len(self.dims) - 1})'
            )
        for k in range(1, self.top + 1):
            expected = (self.dims[k - 1], self.dims[k])
            if self.boundaries[k - 1].shape != expected:
                raise ChainComplexError(
                    f'∂_{k} tem forma {self.boundaries[k - 1].shape}, esperado {expected}', k
                )
        for k in range(1, self.top):
            if not (self.boundaries[k - 1] @ self.boundaries[k]).is_zero():
                raise ChainComplexError(f'∂_{k} ∘ ∂_{k + 1} ≠ 0', k + 1)

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary(self, k: int) -> IntMatrix:
        """∂_k, com ∂_0 e ∂_{top+1} nulos de formas 0 × dims[0] e dims[top] × 0."""
        if k <= 0:
            return IntMatrix.zeros(0, self.dims[0])
        if k > self.top:
            return IntMatrix.zeros(self.dims[self.top], 0)
        return self.boundaries[k - 1]

    @classmethod
    def from_dict(cls, data: dict) -> 'ChainComplex':
        if not isinstance(data, dict) or 'dims' not in data:
            raise ChainComplexError('objeto com a chave "dims" esperado')
        dims = data['dims']
        raw = data.get('boundaries', [])
        if not isinstance(dims, list) or not isinstance(raw, list):
            raise ChainComplexError('"dims" e "boundaries" devem ser listas')
        if len(raw) != max(len(dims) - 1, 0):
            raise ChainComplexError(f'{len(raw)} bordos para {len(dims)} graus')
        boundaries = []
        for k, rows in enumerate(raw, start=1):
            try:
                if rows:
                    boundaries.append(IntMatrix.from_rows(rows, cols=dims[k]))
                else:
                    boundaries.append(IntMatrix.zeros(dims[k - 1], dims[k]))
            except (TypeError, ValueError) as e:
                raise ChainComplexError(f'matriz de ∂_{k} inválida: {e}', k) from e
        return cls(tuple(dims), tuple(boundaries))

    @classmethod
    def from_json(cls, text: str) -> 'ChainComplex':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ChainComplexError(f'JSON inválido: {e}') from e
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: Union[str, Path]) -> 'ChainComplex':
        return cls.from_json(Path(path).read_text(encoding='utf-8'))

    def to_dict(self) -> dict:
        return {'dims': list(self.dims), 'boundaries': [b.to_rows() for b in self.boundaries]}


def homology(c: ChainComplex, i: int) -> AbelianGroup:
    """
    H_i = ker ∂_i / im ∂_{i+1}.

    posto = dim C_i − posto ∂_i − posto ∂_{i+1}; a torção são os fatores
    invariantes > 1 de ∂_{i+1}.

    Raises:
        DegreeOutOfRange: i fora de 0..top
    """
    if not 0 <= i <= c.top:
        raise DegreeOutOfRange(i, c.top)
    outgoing = smith_normal_form(c.boundary(i))
    incoming = smith_normal_form(c.boundary(i + 1))
    group = AbelianGroup(c.dims[i] - outgoing.rank - incoming.rank, tuple(incoming.torsion))
    logger.debug(f'H_{i} = {group.pretty()}')
    return group


def homology_groups(c: ChainComplex, degrees: Optional[Sequence[int]] = None) -> List[AbelianGroup]:
    degrees = range(c.top + 1) if degrees is None else degrees
    return [homology(c, i) for i in degrees]


def presentation_complex(p: Presentation) -> ChainComplex:
    """
    Complexo celular do 2-complexo da apresentação: uma 0-célula, uma 1-célula
    por gerador e uma 2-célula por relator.
    """
    d2 = p.relator_matrix().transpose()
    return ChainComplex((1, p.ngens, len(p.relators)), (IntMatrix.zeros(1, p.ngens), d2))
