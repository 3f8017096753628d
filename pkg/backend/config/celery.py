"""
Celery configuration for the novk project.

Buscas limitadas mais longas (refutação de gerador único, relatórios
completos) podem ser enviadas a um worker; sem broker configurado
elas rodam no próprio processo (CELERY_TASK_ALWAYS_EAGER).
"""
import os
from celery import Celery

# Set the default Django settings module for the 'celery' program.
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')

app = Celery('novk')

# Using a string here means the worker doesn't have to serialize
# the configuration object to child processes.
app.config_from_object('django.conf:settings', namespace='CELERY')

# Load task modules from all registered Django apps.
app.autodiscover_tasks()
