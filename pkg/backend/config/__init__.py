"""
Carrega o app Celery junto com o Django, para que os @shared_task de
apps.dtc.tasks e apps.cli.tasks usem a configuração CELERY_* do settings.
"""
from .celery import app as celery_app

__all__ = ('celery_app',)
