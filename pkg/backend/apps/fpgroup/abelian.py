"""
Grupos abelianos finitamente gerados, abelianização e dim Hom(G, R).
"""
import re
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from apps.core.exceptions import LiteralSyntaxError

from .matrices import IntMatrix, rank_over_rationals, smith_normal_form
from .presentation import Presentation
from .words import FreeWord

_GROUP_TEXT = re.compile(r'^\s*rank\s+(\d+)\s*,\s*torsion\s*\[([\d,\s]*)\]\s*$')


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk, com t1 | t2 | ... e cada ti ≥ 2."""

    rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'torsion', tuple(int(t) for t in self.torsion))
        if self.rank < 0:
            raise ValueError(f'posto negativo: {self.rank}')
        for t in self.torsion:
            if t < 2:
                raise ValueError(f'fator de torção {t} < 2')
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f'torção fora da ordem de divisibilidade: {self.torsion}')

    @classmethod
    def from_invariant_factors(cls, factors: Sequence[int], ngens: int) -> 'AbelianGroup':
        """Cokernel de uma relação com fatores invariantes `factors` em `ngens` geradores."""
        nonzero = [f for f in factors if f]
        return cls(ngens - len(nonzero), tuple(f for f in nonzero if f > 1))

    @classmethod
    def parse(cls, text: str) -> 'AbelianGroup':
        """Inverso de __str__: 'rank 2, torsion [2, 4]'."""
        match = _GROUP_TEXT.match(text)
        if not match:
            raise LiteralSyntaxError(f'grupo abeliano inválido {text!r}')
        body = match.group(2).strip()
        torsion = tuple(int(x) for x in body.split(',')) if body else ()
        return cls(int(match.group(1)), torsion)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {'rank': self.rank, 'torsion': list(self.torsion)}

    def pretty(self) -> str:
        """Notação de soma direta, por exemplo `Z^2 ⊕ Z/2`."""
        parts = []
        if self.rank == 1:
            parts.append('Z')
        elif self.rank > 1:
            parts.append(f'Z^{self.rank}')
        parts.extend(f'Z/{t}' for t in self.torsion)
        return ' ⊕ '.join(parts) or '0'

    def __str__(self):
        return f'rank {self.rank}, torsion [{", ".join(str(t) for t in self.torsion)}]'


def abelianization(p: Presentation) -> AbelianGroup:
    """Cokernel da matriz de relatores abelianizada, via forma de Smith."""
    snf = smith_normal_form(p.relator_matrix())
    return AbelianGroup.from_invariant_factors(snf.d, p.ngens)


def dim_hom_R(p: Presentation) -> int:
    """dim Hom(G, R) = #geradores − posto sobre Q da matriz de relatores."""
    return p.ngens - rank_over_rationals(p.relator_matrix())


@dataclass(frozen=True)
class AbelianizationMap:
    """
    Coordenadas canônicas em G^ab para vetores de somas de expoentes.

    Com U·R·V = diag(d), um vetor linha x vai para y = x·V; as coordenadas
    com d_i = 1 são descartadas, as de torção são lidas módulo d_i e as
    livres ficam inteiras. Coordenadas de torção vêm antes das livres.
    """

    group: AbelianGroup
    ngens: int
    V: IntMatrix
    moduli: Tuple[int, ...]
    kept: Tuple[int, ...]
    element_images: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None, compare=False)

    @classmethod
    def from_presentation(cls, p: Presentation) -> 'AbelianizationMap':
        snf = smith_normal_form(p.relator_matrix())
        factors = list(snf.d) + [0] * (p.ngens - len(snf.d))
        torsion = [i for i, f in enumerate(factors) if f > 1]
        free = [i for i, f in enumerate(factors) if f == 0]
        kept = tuple(torsion + free)
        moduli = tuple(factors[i] for i in kept)
        return cls(AbelianGroup.from_invariant_factors(snf.d, p.ngens), p.ngens, snf.V, moduli, kept)

    @property
    def width(self) -> int:
        return len(self.kept)

    def zero(self) -> Tuple[int, ...]:
        return (0,) * self.width

    def reduce(self, vector: Sequence[int]) -> Tuple[int, ...]:
        return tuple(v % m if m else v for v, m in zip(vector, self.moduli))

    def add(self, x: Sequence[int], y: Sequence[int]) -> Tuple[int, ...]:
        return self.reduce([a + b for a, b in zip(x, y)])

    def scale(self, x: Sequence[int], k: int) -> Tuple[int, ...]:
        return self.reduce([k * a for a in x])

    def of_exponents(self, sums: Sequence[int]) -> Tuple[int, ...]:
        y = [sum(sums[k] * self.V[k, j] for k in range(self.ngens)) for j in range(self.ngens)]
        return self.reduce([y[i] for i in self.kept])

    def of_word(self, word: FreeWord) -> Tuple[int, ...]:
        return self.of_exponents(word.exponent_sums(self.ngens))

    def of_element(self, element: int) -> Tuple[int, ...]:
        if self.element_images is None:
            raise ValueError('mapa sem tabela de elementos (use abelianization_map)')
        return self.element_images[element]


def abelian_group_orders(group: AbelianGroup) -> List[int]:
    """Ordens dos somandos cíclicos (0 para Z), na ordem das coordenadas."""
    return list(group.torsion) + [0] * group.rank
