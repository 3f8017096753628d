"""
Exceções compartilhadas por todos os apps da bancada.

Todo erro de domínio herda de NovkError; a CLI converte qualquer
NovkError em saída com código 1.
"""


class NovkError(Exception):
    """Raiz dos erros de domínio."""


class BudgetExceeded(NovkError):
    """Uma busca exaustiva passaria do orçamento configurado."""

    def __init__(self, what: str, limit: int, needed: int | None = None):
        self.what = what
        self.limit = limit
        self.needed = needed
        detail = f' (necessário: {needed})' if needed is not None else ''
        super().__init__(f'{what}: orçamento {limit} excedido{detail}')


class LiteralSyntaxError(NovkError):
    """Erro de sintaxe em um literal de texto, com posição 1-based."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f'linha {line}, coluna {column}: {message}')
