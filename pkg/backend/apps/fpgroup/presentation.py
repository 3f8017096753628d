"""
Apresentações finitas e o formato de arquivo `.pres`.

Formato (UTF-8):

    # grupo binário icosaédrico
    gens: a b
    rel: a^5 b^-3
    rel: a^5 (a b)^-2

Gramática das palavras:

    word := term ( ['*'] term )*
    term := atom [ '^' int ]
    atom := name | '(' word ')' | '1'

`#` inicia comentário até o fim da linha e `;` separa declarações na
mesma linha. Nomes seguem a regra de identificadores Python.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .exceptions import PresentationSyntaxError, UndeclaredGenerator
from .words import FreeWord, free_reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Presentation:
    """Geradores nomeados e relatores reduzidos."""

    generators: Tuple[str, ...]
    relators: Tuple[FreeWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(self.generators))
        object.__setattr__(self, 'relators', tuple(free_reduce(r) for r in self.relators))

        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f'nomes de geradores repetidos: {self.generators}')
        for index, relator in enumerate(self.relators):
            for g in relator.generators():
                if not 0 <= g < len(self.generators):
                    raise ValueError(f'relator {index} usa gerador inexistente {g}')

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def relator_matrix(self):
        """Matriz abelianizada: linhas = relatores, colunas = geradores, entrada = soma de expoentes."""
        from .matrices import IntMatrix
        rows = [r.exponent_sums(self.ngens) for r in self.relators]
        return IntMatrix.from_rows(rows, cols=self.ngens)

    def word(self, text: str) -> FreeWord:
        return parse_word(text, self.generators)

    def render(self) -> str:
        lines = [f'gens: {" ".join(self.generators)}']
        lines.extend(f'rel: {r.render(self.generators)}' for r in self.relators)
        return '\n'.join(lines) + '\n'


class _WordParser:
    """Descida recursiva sobre um trecho de texto; colunas são 1-based no original."""

    def __init__(self, text: str, generators: Sequence[str], line: int, column: int):
        self.text = text
        self.index = {name: i for i, name in enumerate(generators)}
        self.line = line
        self.base = column
        self.pos = 0

    def error(self, message: str):
        raise PresentationSyntaxError(message, self.line, self.base + self.pos)

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def parse(self) -> FreeWord:
        if not self.peek():
            self.error('palavra vazia')
        word = self.word()
        if self.peek():
            self.error(f'caractere inesperado {self.peek()!r}')
        return free_reduce(word)

    def word(self) -> FreeWord:
        syllables: List[Tuple[int, int]] = []
        while True:
            ch = self.peek()
            if ch == '*':
                if not syllables:
                    self.error('* sem fator à esquerda')
                self.pos += 1
                ch = self.peek()
                if not ch or ch == ')':
                    self.error('* sem fator à direita')
            if not ch or ch == ')':
                break
            syllables.extend(self.term().syllables)
        return FreeWord(tuple(syllables))

    def term(self) -> FreeWord:
        atom = self.atom()
        if self.peek() == '^':
            self.pos += 1
            atom = atom.power(self.integer())
        return atom

    def atom(self) -> FreeWord:
        ch = self.peek()
        if ch == '(':
            self.pos += 1
            inner = self.word()
            if self.peek() != ')':
                self.error('parêntese não fechado')
            self.pos += 1
            return inner
        if ch == '1':
            self.pos += 1
            return FreeWord()
        if ch.isalpha() or ch == '_':
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == '_'):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.index:
                raise UndeclaredGenerator(name, self.line, self.base + start)
            return FreeWord(((self.index[name], 1),))
        self.error(f'caractere inesperado {ch!r}' if ch else 'fim inesperado da palavra')

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in '+-':
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error('expoente inteiro esperado após ^')
        return int(self.text[start:self.pos])


def parse_word(text: str, generators: Sequence[str], line: int = 1, column: int = 1) -> FreeWord:
    """
    Interpreta uma palavra nos geradores dados e devolve a forma reduzida.

    Raises:
        PresentationSyntaxError: sintaxe inválida (linha/coluna relativas a `column`)
        UndeclaredGenerator: nome fora de `generators`
    """
    return _WordParser(text, generators, line, column).parse()


def _statements(text: str):
    """Gera (linha, coluna, trecho) para cada declaração não vazia."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0]
        offset = 0
        for piece in content.split(';'):
            stripped = piece.strip()
            if stripped:
                lead = len(piece) - len(piece.lstrip())
                yield lineno, offset + lead + 1, stripped
            offset += len(piece) + 1


def parse_presentation(text: str) -> Presentation:
    """
    Lê um arquivo de apresentação.

    Exatamente uma declaração `gens:` (pode ser vazia) precede as linhas `rel:`.

    Raises:
        PresentationSyntaxError com linha e coluna
        UndeclaredGenerator se um relator usar nome não declarado
    """
    generators = None
    relators: List[FreeWord] = []

    for line, column, statement in _statements(text):
        keyword, sep, body = statement.partition(':')
        keyword = keyword.strip().lower()
        if not sep or keyword not in ('gens', 'rel'):
            raise PresentationSyntaxError(
                f'declaração desconhecida {statement!r} (use gens: ou rel:)', line, column
            )
        body_column = column + len(statement) - len(body) + (len(body) - len(body.lstrip()))

        if keyword == 'gens':
            if generators is not None:
                raise PresentationSyntaxError('gens: declarado mais de uma vez', line, column)
            names = body.split()
            for name in names:
                if not name.isidentifier():
                    raise PresentationSyntaxError(
                        f'nome de gerador inválido {name!r}', line, column + statement.index(name)
                    )
            if len(set(names)) != len(names):
                raise PresentationSyntaxError('nomes de geradores repetidos', line, body_column)
            generators = tuple(names)
        else:
            if generators is None:
                raise PresentationSyntaxError('rel: antes de gens:', line, column)
            relators.append(parse_word(body.strip(), generators, line, body_column))

    if generators is None:
        raise PresentationSyntaxError('declaração gens: ausente', 1, 1)

    presentation = Presentation(generators, tuple(relators))
    logger.debug(f'Apresentação lida: {presentation.ngens} geradores, {len(relators)} relatores')
    return presentation
