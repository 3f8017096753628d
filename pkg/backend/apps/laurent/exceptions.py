from apps.core.exceptions import NovkError


class TruncationIncrease(NovkError):
    """Pedido de truncamento acima do grau conhecido."""


class RingMismatch(NovkError):
    """Operandos sobre anéis de coeficientes diferentes."""


class DivisionByZero(NovkError):
    """Inversão da série nula."""


class NonUnitLeadingTerm(NovkError):
    """O coeficiente mais baixo não é unidade; a série não é inversível."""
