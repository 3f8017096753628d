"""
Registro das execuções da linha de comando.

Só é gravado quando settings.NOVK_RECORD_RUNS está ligado.
"""
from django.db import models
from django.utils import timezone


class CommandRun(models.Model):
    """Uma execução de `novk <área> <ação>` com argumentos e resultado."""

    STATUS_CHOICES = [
        ('sucesso', 'Sucesso'),
        ('erro', 'Erro'),
    ]

    subcomando = models.CharField(max_length=100, help_text='Ex: dtc mu-bounds')
    argumentos = models.JSONField(default=list, blank=True)

    # Execução
    status = models.CharField(max_length=20, choices=STATUS_CHOICES, default='sucesso')
    codigo_saida = models.IntegerField(default=0)
    iniciado_em = models.DateTimeField(default=timezone.now)
    finalizado_em = models.DateTimeField(null=True, blank=True)
    duracao_segundos = models.FloatField(null=True, blank=True)

    # Resultado
    resultado = models.JSONField(
        default=dict,
        blank=True,
        help_text='Registro JSON emitido pelo subcomando'
    )
    mensagem = models.TextField(blank=True)

    class Meta:
        verbose_name = 'Execução da CLI'
        verbose_name_plural = 'Execuções da CLI'
        ordering = ['-iniciado_em']
        indexes = [
            models.Index(fields=['subcomando', '-iniciado_em']),
            models.Index(fields=['status']),
        ]

    def __str__(self):
        return f"{self.subcomando} - {self.status} ({self.iniciado_em})"

    def finalizar(self, codigo_saida: int, resultado: dict = None, mensagem: str = ''):
        """Fecha a execução, calcula a duração e salva."""
        self.finalizado_em = timezone.now()
        self.duracao_segundos = (self.finalizado_em - self.iniciado_em).total_seconds()
        self.codigo_saida = codigo_saida
        self.status = 'sucesso' if codigo_saida == 0 else 'erro'
        self.resultado = resultado or {}
        self.mensagem = mensagem
        self.save()
