"""
Literal de palavras do produto livre: blocos `[k:w]`, por exemplo
`[0:a][1:b^-1][0:a^5]`, com w na gramática de palavras da apresentação.
`1` (ou texto vazio) é a identidade.
"""
import re

from apps.core.exceptions import LiteralSyntaxError
from apps.fpgroup.presentation import parse_word
from apps.fpgroup.tables import FiniteGroupTable

from .product import Letter, ProductWord, pw_reduce

_BLOCK = re.compile(r'\[\s*(?P<level>[+-]?\d+)\s*:(?P<word>[^\[\]]*)\]')


def parse_product_word(text: str, group: FiniteGroupTable) -> ProductWord:
    """
    Interpreta blocos `[k:w]` e devolve a forma normal.

    Raises:
        LiteralSyntaxError: bloco malformado (coluna 1-based)
        UndeclaredGenerator: gerador fora da apresentação do grupo
    """
    if group.presentation is None:
        raise ValueError('tabela sem apresentação: não há nomes de geradores')
    if text.strip() in ('', '1'):
        return ProductWord(group)

    generators = group.presentation.generators
    raw = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _BLOCK.match(text, pos)
        if not match:
            raise LiteralSyntaxError(f'bloco [k:palavra] esperado em {text[pos:pos + 8]!r}', 1, pos + 1)
        word = match.group('word')
        if not word.strip():
            raise LiteralSyntaxError('palavra vazia dentro do bloco', 1, match.start('word') + 1)
        element = group.evaluate(parse_word(word, generators, 1, match.start('word') + 1))
        raw.append(Letter(int(match.group('level')), element))
        pos = match.end()
    return pw_reduce(group, raw)


def render_product_word(x: ProductWord) -> str:
    """Forma canônica `[k:nome]...`; `1` para a identidade."""
    if x.is_identity:
        return '1'
    return ''.join(f'[{k}:{x.group.name(g)}]' for k, g in x.letters)
