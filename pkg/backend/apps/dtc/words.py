"""
Geradores e palavras "a menos de translações de deck e completamento".

Uma palavra DTC é um produto finito de fatores (k, g, α): o gerador g
transladado k níveis e elevado a α. A avaliação em Π_h descarta os fatores
cuja altura transladada fica abaixo de h e aplica pw_zip no resultado.
"""
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from apps.core.exceptions import LiteralSyntaxError
from apps.freeprod.product import ProductWord, pw_height, pw_mul, pw_power, pw_shift, pw_zip

from .exceptions import UnresolvedGenerator

_FACTOR = re.compile(r'\{\s*(?P<shift>[+-]?\d+)\s*:\s*(?P<gid>[A-Za-z_]\w*)\s*(?:\^\s*(?P<exp>[+-]?\d+))?\s*\}')


@dataclass(frozen=True)
class DtcGenerator:
    """
    Letra (τ, g) com altura atribuída.

    Sem altura explícita vale pw_height(word); uma altura menor que essa
    é rejeitada.
    """

    id: str
    word: ProductWord
    height: Optional[Union[int, float]] = None

    def __post_init__(self):
        natural = pw_height(self.word)
        if self.height is None:
            object.__setattr__(self, 'height', natural)
        elif self.height < natural:
            raise ValueError(
                f'altura {self.height} de {self.id} abaixo da altura da palavra ({natural})'
            )


class Factor(NamedTuple):
    """Gerador `gid` transladado `shift` níveis e elevado a `exp`."""

    shift: int
    gid: str
    exp: int = 1


@dataclass(frozen=True)
class DtcWord:
    factors: Tuple[Factor, ...] = ()

    def __post_init__(self):
        factors = tuple(Factor(int(k), str(g), int(e)) for k, g, e in self.factors)
        for f in factors:
            if f.exp == 0:
                raise ValueError(f'expoente nulo no fator {{{f.shift}:{f.gid}}}')
        object.__setattr__(self, 'factors', factors)

    def __len__(self):
        return len(self.factors)

    def shifted(self, k: int) -> 'DtcWord':
        return DtcWord(tuple(Factor(f.shift + k, f.gid, f.exp) for f in self.factors))

    def compact(self) -> 'DtcWord':
        """Junta fatores vizinhos com o mesmo (shift, gid), somando expoentes."""
        stack: List[List] = []
        for f in self.factors:
            if stack and stack[-1][0] == f.shift and stack[-1][1] == f.gid:
                stack[-1][2] += f.exp
                if stack[-1][2] == 0:
                    stack.pop()
            else:
                stack.append([f.shift, f.gid, f.exp])
        return DtcWord(tuple(Factor(*f) for f in stack))

    def generator_ids(self) -> set:
        return {f.gid for f in self.factors}


def parse_dtc_word(text: str) -> DtcWord:
    """
    Literal `{k:gid^e}{...}`; `^e` pode ser omitido (vale 1) e `1` é a palavra vazia.

    Raises:
        LiteralSyntaxError com a coluna do primeiro caractere inválido
    """
    if text.strip() in ('', '1'):
        return DtcWord()
    factors = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _FACTOR.match(text, pos)
        if not match:
            raise LiteralSyntaxError(f'fator {{k:gid^e}} esperado em {text[pos:pos + 10]!r}', 1, pos + 1)
        exp = int(match.group('exp')) if match.group('exp') else 1
        if exp == 0:
            raise LiteralSyntaxError('expoente nulo', 1, match.start('exp') + 1)
        factors.append(Factor(int(match.group('shift')), match.group('gid'), exp))
        pos = match.end()
    return DtcWord(tuple(factors))


def render_dtc_word(w: DtcWord) -> str:
    if not w.factors:
        return '1'
    return ''.join(f'{{{f.shift}:{f.gid}^{f.exp}}}' for f in w.factors)


def generator_index(gens: Sequence[DtcGenerator]) -> Dict[str, DtcGenerator]:
    index = {}
    for g in gens:
        if g.id in index:
            raise ValueError(f'gerador DTC repetido: {g.id}')
        index[g.id] = g
    return index


def resolve(w: DtcWord, index: Dict[str, object]) -> None:
    for f in w.factors:
        if f.gid not in index:
            raise UnresolvedGenerator(f.gid)


def eval_factor(gen: DtcGenerator, shift: int, exp: int, h: int) -> ProductWord:
    """Imagem em Π_h de um fator; identidade se a altura transladada ficar abaixo de h."""
    if gen.height + shift < h:
        return ProductWord(gen.word.group)
    return pw_zip(pw_power(pw_shift(gen.word, shift), exp), h)


def eval_dtc_word(w: DtcWord, gens: Iterable[DtcGenerator], h: int) -> ProductWord:
    """
    Avalia a palavra em Π_h.

    Raises:
        UnresolvedGenerator: fator com gerador fora de `gens`
        ValueError: lista de geradores vazia (não há grupo para a identidade)
    """
    gens = list(gens)
    if not gens:
        raise ValueError('avaliação sem geradores')
    index = generator_index(gens)
    resolve(w, index)

    result = ProductWord(gens[0].word.group)
    for f in w.factors:
        result = pw_mul(result, eval_factor(index[f.gid], f.shift, f.exp, h))
    return pw_zip(result, h)
