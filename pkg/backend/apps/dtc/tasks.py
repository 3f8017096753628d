"""
Celery tasks para as buscas longas do app dtc.
"""
import logging

from celery import shared_task

from apps.fpgroup.presentation import parse_presentation
from apps.fpgroup.todd_coxeter import todd_coxeter
from apps.freeprod.product import Window

from .refutation import single_generator_refutation_search

logger = logging.getLogger(__name__)


@shared_task
def run_refutation_search(presentation_text: str, window: str, max_len: int) -> dict:
    """
    Realiza o grupo e roda a refutação com um gerador.

    Args:
        presentation_text: apresentação no formato `gens: ...` / `rel: ...`
        window: janela `lo:hi`

    Returns:
        Dict do RefutationReport
    """
    group = todd_coxeter(parse_presentation(presentation_text))
    logger.info(f'Task de refutação: grupo de ordem {group.order}, janela {window}')
    report = single_generator_refutation_search(group, Window.parse(window), max_len)
    return report.to_dict()
