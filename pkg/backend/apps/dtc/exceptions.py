from apps.core.exceptions import NovkError


class UnresolvedGenerator(NovkError):
    """Fator de uma palavra DTC referencia um gerador inexistente."""

    def __init__(self, gid: str):
        self.gid = gid
        super().__init__(f'gerador DTC não declarado: {gid}')
