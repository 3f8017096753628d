from apps.core.exceptions import LiteralSyntaxError, NovkError


class PresentationSyntaxError(LiteralSyntaxError):
    """Erro de sintaxe no arquivo de apresentação ou em uma palavra."""


class UndeclaredGenerator(PresentationSyntaxError):
    """Palavra usa um gerador que não foi declarado em `gens:`."""

    def __init__(self, name: str, line: int = 1, column: int = 1):
        self.name = name
        super().__init__(f'gerador não declarado {name}', line, column)


class CosetLimitExceeded(NovkError):
    """A enumeração não terminou dentro do limite de classes laterais."""

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(
            f'enumeração não terminou com {limit} classes laterais '
            f'(grupo possivelmente infinito ou limite pequeno demais)'
        )
