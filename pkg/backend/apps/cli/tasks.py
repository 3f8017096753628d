"""
Celery tasks do app cli.
"""
import logging

from celery import shared_task

from .report import build_report

logger = logging.getLogger(__name__)


@shared_task
def build_example_report(case: str) -> dict:
    """Gera o relatório de um exemplo embarcado e devolve o dict JSON."""
    logger.info(f'Task de relatório: {case}')
    return build_report(case).to_dict()
