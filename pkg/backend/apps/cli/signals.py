"""
Signals do registro de execuções.
"""
import logging

from django.db.models.signals import post_save
from django.dispatch import receiver

from .models import CommandRun

logger = logging.getLogger(__name__)


@receiver(post_save, sender=CommandRun)
def log_execucao_salva(sender, instance, created, **kwargs):
    """Log quando uma execução é registrada ou fechada."""
    if created:
        logger.info(f"Execução registrada: {instance.subcomando} (ID: {instance.pk})")
    else:
        logger.info(
            f"Execução finalizada: {instance.subcomando} | "
            f"Status: {instance.status} | Código: {instance.codigo_saida} | "
            f"Duração: {instance.duracao_segundos}s"
        )
