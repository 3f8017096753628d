#!/usr/bin/env python
"""Utilitário de linha de comando do Django para a bancada novk."""
import os
import sys


def main():
    """Roda tarefas administrativas (migrate, test, novk ...)."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django não encontrado. Ative o ambiente virtual e instale "
            "backend/requirements.txt."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
