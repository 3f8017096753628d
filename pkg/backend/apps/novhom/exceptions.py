from typing import Optional

from apps.core.exceptions import NovkError


class ChainComplexError(NovkError):
    """Complexo de cadeias malformado; `degree` aponta o bordo problemático."""

    def __init__(self, message: str, degree: Optional[int] = None):
        self.degree = degree
        prefix = f'grau {degree}: ' if degree is not None else ''
        super().__init__(f'{prefix}{message}')


class DegreeOutOfRange(NovkError):

    def __init__(self, degree: int, top: int):
        self.degree = degree
        self.top = top
        super().__init__(f'grau {degree} fora de 0..{top}')


class HypothesisViolation(NovkError):
    """A fórmula pedida só está estabelecida sob hipóteses que a entrada não cumpre."""


class OutOfScope(NovkError):
    """Consulta fora dos graus cobertos pela fórmula."""


class InvalidSystem(NovkError):
    """Sistema de grupos abelianos com formas incompatíveis ou mapas mal definidos."""


class WindowTooShort(NovkError):

    def __init__(self, length: int, K: int):
        self.length = length
        self.K = K
        super().__init__(f'janela com {length} níveis não comporta K = {K} (precisa de mais que K níveis)')
