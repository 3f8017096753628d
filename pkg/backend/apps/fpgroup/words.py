"""
Palavras no grupo livre, guardadas como sílabas (gerador, expoente).

A redução livre passa pelos elementos de `sympy.combinatorics.free_groups`.
"""
from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import mul
from typing import Iterable, List, Sequence, Tuple

from sympy.combinatorics.free_groups import FreeGroup, FreeGroupElement, free_group

Syllable = Tuple[int, int]


@dataclass(frozen=True)
class FreeWord:
    """
    Palavra livre. O construtor não reduz; use free_reduce.

    Na forma reduzida sílabas vizinhas têm geradores distintos e nenhum
    expoente é zero.
    """

    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'syllables', tuple((int(g), int(e)) for g, e in self.syllables))

    @classmethod
    def from_letters(cls, letters: Iterable[int], inverse: bool = False) -> 'FreeWord':
        """Palavra positiva a partir de uma sequência de índices de geradores."""
        sign = -1 if inverse else 1
        return free_reduce(cls(tuple((g, sign) for g in letters)))

    @property
    def is_empty(self) -> bool:
        return not self.syllables

    @property
    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def generators(self) -> set:
        return {g for g, _ in self.syllables}

    def inverse(self) -> 'FreeWord':
        return FreeWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __mul__(self, other: 'FreeWord') -> 'FreeWord':
        return free_reduce(FreeWord(self.syllables + other.syllables))

    def power(self, n: int) -> 'FreeWord':
        base = self if n >= 0 else self.inverse()
        return free_reduce(FreeWord(base.syllables * abs(n)))

    def exponent_sums(self, ngens: int) -> List[int]:
        """Reescrita abeliana: soma dos expoentes de cada gerador."""
        sums = [0] * ngens
        for g, e in self.syllables:
            sums[g] += e
        return sums

    def letters(self) -> List[Tuple[int, int]]:
        """Expande em letras (gerador, ±1)."""
        out = []
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            out.extend([(g, step)] * abs(e))
        return out

    def render(self, names: Sequence[str]) -> str:
        if self.is_empty:
            return '1'
        parts = []
        for g, e in self.syllables:
            parts.append(names[g] if e == 1 else f'{names[g]}^{e}')
        return ' '.join(parts)


@lru_cache(maxsize=None)
def free_group_of_rank(rank: int) -> FreeGroup:
    """Grupo livre do sympy em x0..x{rank-1}; um por posto."""
    if rank < 1:
        raise ValueError(f'posto do grupo livre deve ser >= 1 (recebido {rank})')
    return free_group(', '.join(f'x{i}' for i in range(rank)))[0]


def to_free_element(word: FreeWord, group: FreeGroup) -> FreeGroupElement:
    gens = group.generators
    return reduce(mul, (gens[g] ** e for g, e in word.syllables), group.identity)


def from_free_element(element: FreeGroupElement, group: FreeGroup) -> FreeWord:
    index = {s: i for i, s in enumerate(group.symbols)}
    return FreeWord(tuple((index[s], e) for s, e in element.array_form))


def free_reduce(word: FreeWord) -> FreeWord:
    """Forma reduzida: remove expoentes nulos e funde sílabas vizinhas em cascata."""
    if word.is_empty:
        return word
    group = free_group_of_rank(max(word.generators()) + 1)
    return from_free_element(to_free_element(word, group), group)
