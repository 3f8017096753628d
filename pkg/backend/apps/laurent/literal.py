"""
Sintaxe textual das séries: soma de termos `c*t^e`, por exemplo `1 - t + 3*t^2`.

O truncamento não faz parte do literal; ele é informado à parte (--trunc).
"""
import re
from typing import Any, Dict

from apps.core.exceptions import LiteralSyntaxError

from .rings import CoefficientRing
from .series import LaurentSeries

_TERM = re.compile(
    r'(?P<sign>[+-])?'
    r'(?P<coef>\d+(?:/\d+)?)?'
    r'(?P<star>\*)?'
    r'(?P<var>t(?:\^(?P<exp>[+-]?\d+))?)?'
)


def parse_series(text: str, ring: CoefficientRing, truncation: int) -> LaurentSeries:
    """
    Converte um literal em LaurentSeries.

    Espaços são ignorados; `t` vale `t^1` e o coeficiente 1 pode ser omitido.

    Raises:
        LiteralSyntaxError com a coluna do primeiro caractere inválido
    """
    compact = ''.join(text.split())
    if not compact:
        raise LiteralSyntaxError('série vazia', 1, 1)

    # Mapeia posições do texto compactado para colunas do original
    columns = [i + 1 for i, ch in enumerate(text) if not ch.isspace()]

    terms: Dict[int, Any] = {}
    pos = 0
    first = True
    while pos < len(compact):
        match = _TERM.match(compact, pos)
        column = columns[pos]
        if not match or match.end() == pos:
            raise LiteralSyntaxError(f'caractere inesperado {compact[pos]!r}', 1, column)
        if not first and not match.group('sign'):
            raise LiteralSyntaxError('termos devem ser separados por + ou -', 1, column)
        if not match.group('coef') and not match.group('var'):
            raise LiteralSyntaxError('termo sem coeficiente nem t', 1, column)
        if match.group('star') and not (match.group('coef') and match.group('var')):
            raise LiteralSyntaxError('* deve ficar entre coeficiente e t', 1, column)

        try:
            coef = ring.parse_coefficient(match.group('coef') or '1')
        except (ValueError, ZeroDivisionError) as exc:
            raise LiteralSyntaxError(f'coeficiente inválido em {ring}: {exc}', 1, column) from exc
        if match.group('sign') == '-':
            coef = ring.normalize(-coef)

        if match.group('var'):
            exponent = int(match.group('exp')) if match.group('exp') else 1
        else:
            exponent = 0

        terms[exponent] = ring.normalize(terms.get(exponent, 0) + coef)
        pos = match.end()
        first = False

    return LaurentSeries.from_terms(ring, terms, truncation)


def render_series(x: LaurentSeries) -> str:
    """Forma textual canônica, com expoentes crescentes; `0` para a série nula."""
    if x.is_zero:
        return '0'

    ring = x.ring
    parts = []
    for exponent, coef in sorted(x.terms().items()):
        negative = coef < 0
        magnitude = -coef if negative else coef
        if exponent == 0:
            body = ring.render_coefficient(magnitude)
        else:
            var = 't' if exponent == 1 else f't^{exponent}'
            body = var if magnitude == 1 else f'{ring.render_coefficient(magnitude)}*{var}'

        if not parts:
            parts.append(f'-{body}' if negative else body)
        else:
            parts.append(f'- {body}' if negative else f'+ {body}')
    return ' '.join(parts)
