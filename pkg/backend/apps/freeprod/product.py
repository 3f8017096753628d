"""
Produto livre Π_h = ∗_{k≥h} G_k de cópias de um mesmo grupo finito.

Uma letra (k, g) é um elemento g ≠ 1 da cópia G_k; a palavra em forma
normal nunca tem duas letras vizinhas no mesmo nível. A translação de
níveis (pw_shift) é a ação do grupo de deck Z, e pw_zip(x, h) é a imagem
de x em Π_h, que mata as cópias abaixo de h.
"""
import math
import re
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Tuple, Union

from apps.fpgroup.tables import FiniteGroupTable

from .exceptions import GroupMismatch

# Altura da palavra vazia: menor que qualquer nível
BOTTOM = -math.inf

_WINDOW_TEXT = re.compile(r'^\s*(-?\d+)\s*:\s*(-?\d+)\s*$')


class Letter(NamedTuple):
    level: int
    element: int


@dataclass(frozen=True)
class Window:
    """Intervalo finito de níveis [lo, hi]."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f'janela vazia: {self.lo}:{self.hi}')

    @classmethod
    def parse(cls, text: str) -> 'Window':
        match = _WINDOW_TEXT.match(text)
        if not match:
            raise ValueError(f'janela inválida {text!r} (use lo:hi)')
        return cls(int(match.group(1)), int(match.group(2)))

    def __contains__(self, level: int) -> bool:
        return self.lo <= level <= self.hi

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def levels(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self):
        return f'{self.lo}:{self.hi}'


@dataclass(frozen=True, eq=False)
class ProductWord:
    """
    Elemento do produto livre em forma normal.

    A igualdade exige tabelas de grupo iguais (FiniteGroupTable.same_group)
    e as mesmas letras.
    """

    group: FiniteGroupTable
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(Letter(int(k), int(g)) for k, g in self.letters)
        for letter in letters:
            if letter.element == self.group.identity:
                raise ValueError(f'letra identidade no nível {letter.level}')
        for a, b in zip(letters, letters[1:]):
            if a.level == b.level:
                raise ValueError(f'letras vizinhas no mesmo nível {a.level}; use pw_reduce')
        object.__setattr__(self, 'letters', letters)

    def __eq__(self, other):
        if not isinstance(other, ProductWord):
            return NotImplemented
        return self.letters == other.letters and self.group.same_group(other.group)

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: 'ProductWord') -> 'ProductWord':
        return pw_mul(self, other)

    def __repr__(self):
        return f'ProductWord({list(self.letters)})'


RawLetter = Union[Letter, Tuple[int, int]]


def pw_reduce(group: FiniteGroupTable, raw: Iterable[RawLetter]) -> ProductWord:
    """
    Forma normal: descarta identidades e funde letras vizinhas do mesmo
    nível pela multiplicação do grupo, em cascata.

    Raises:
        IndexError: índice de elemento fora da tabela
    """
    stack: List[List[int]] = []
    for level, element in raw:
        if not 0 <= element < group.order:
            raise IndexError(f'elemento {element} fora do grupo de ordem {group.order}')
        if element == group.identity:
            continue
        if stack and stack[-1][0] == level:
            merged = group.mul[stack[-1][1]][element]
            if merged == group.identity:
                stack.pop()
            else:
                stack[-1][1] = merged
        else:
            stack.append([level, element])
    return ProductWord(group, tuple(Letter(k, g) for k, g in stack))


def _same_group(x: ProductWord, y: ProductWord):
    if not x.group.same_group(y.group):
        raise GroupMismatch('palavras sobre tabelas de grupo diferentes')


def pw_mul(x: ProductWord, y: ProductWord) -> ProductWord:
    _same_group(x, y)
    return pw_reduce(x.group, x.letters + y.letters)


def pw_inv(x: ProductWord) -> ProductWord:
    inv = x.group.inv
    return ProductWord(x.group, tuple(Letter(k, inv[g]) for k, g in reversed(x.letters)))


def pw_shift(x: ProductWord, k: int) -> ProductWord:
    """Ação de deck: soma k a todos os níveis."""
    return ProductWord(x.group, tuple(Letter(level + k, g) for level, g in x.letters))


def pw_zip(x: ProductWord, h: int) -> ProductWord:
    """Imagem em Π_h: apaga as letras de nível < h e reduz de novo."""
    return pw_reduce(x.group, [letter for letter in x.letters if letter.level >= h])


def pw_height(x: ProductWord) -> Union[int, float]:
    """
    Maior nível h com pw_zip(x, h) ≠ 1; BOTTOM para a palavra vazia.

    Coincide com o maior nível presente, exceto quando apagar as letras
    de baixo faz o topo cancelar: (1,a)(0,b)(1,a^-1) tem altura 0. Assim
    pw_zip(x, h) é trivial exatamente quando h > pw_height(x).
    """
    for level in sorted({letter.level for letter in x.letters}, reverse=True):
        if not pw_zip(x, level).is_identity:
            return level
    return BOTTOM


def pw_cyclic_reduce(x: ProductWord) -> Tuple[ProductWord, ProductWord]:
    """
    Decompõe x = w · c · w^-1 com w de comprimento k máximo, k < N/2, tal
    que a i-ésima letra é inversa da (N+1-i)-ésima para i ≤ k.
    """
    letters = x.letters
    n = len(letters)
    inv = x.group.inv
    k = 0
    while 2 * (k + 1) < n:
        first, last = letters[k], letters[n - 1 - k]
        if first.level != last.level or first.element != inv[last.element]:
            break
        k += 1
    conjugator = ProductWord(x.group, letters[:k])
    core = ProductWord(x.group, letters[k:n - k])
    if pw_reduce(x.group, conjugator.letters + core.letters + pw_inv(conjugator).letters) != x:
        raise ArithmeticError('recomposição w · c · w^-1 não reproduz a palavra')
    return conjugator, core


def _core_power(core: ProductWord, n: int) -> List[Letter]:
    """Potência n ≥ 1 de um núcleo ciclicamente reduzido, já em forma normal."""
    group = core.group
    letters = core.letters
    if len(letters) == 1:
        level, g = letters[0]
        return [Letter(level, group.power(g, n))]
    first, last = letters[0], letters[-1]
    if first.level != last.level:
        return list(letters) * n
    # última letra encosta na primeira: funde as duas a cada repetição
    joint = Letter(first.level, group.mul[last.element][first.element])
    middle = list(letters[1:-1])
    return [first] + middle + ([joint] + middle) * (n - 1) + [last]


def pw_power(x: ProductWord, n: int) -> ProductWord:
    """x^n pela decomposição cíclica: w · c^n · w^-1."""
    if n == 0 or x.is_identity:
        return ProductWord(x.group)
    if n < 0:
        x, n = pw_inv(x), -n
    conjugator, core = pw_cyclic_reduce(x)
    raw = list(conjugator.letters) + _core_power(core, n) + list(pw_inv(conjugator).letters)
    return pw_reduce(x.group, raw)


def pw_is_single_letter(x: ProductWord) -> bool:
    """Forma normal de comprimento ≤ 1 (a identidade conta)."""
    return len(x.letters) <= 1
