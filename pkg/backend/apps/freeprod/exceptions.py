from apps.core.exceptions import NovkError


class GroupMismatch(NovkError):
    """Palavras sobre tabelas de grupo diferentes."""
