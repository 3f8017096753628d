#!/usr/bin/env python
"""
Lançador da CLI: `python novk.py <área> <ação> ...` equivale a
`python manage.py novk <área> <ação> ...`.
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    import django
    django.setup()

    from apps.cli.dispatch import cmd_dispatch

    result = cmd_dispatch(sys.argv[1:])
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    sys.exit(result.status)


if __name__ == '__main__':
    main()
