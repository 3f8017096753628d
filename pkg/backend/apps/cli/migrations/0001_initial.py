# Generated by Django 5.2.7 on 2026-10-18 12:00

import django.utils.timezone
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CommandRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('subcomando', models.CharField(help_text='Ex: dtc mu-bounds', max_length=100)),
                ('argumentos', models.JSONField(blank=True, default=list)),
                ('status', models.CharField(choices=[('sucesso', 'Sucesso'), ('erro', 'Erro')], default='sucesso', max_length=20)),
                ('codigo_saida', models.IntegerField(default=0)),
                ('iniciado_em', models.DateTimeField(default=django.utils.timezone.now)),
                ('finalizado_em', models.DateTimeField(blank=True, null=True)),
                ('duracao_segundos', models.FloatField(blank=True, null=True)),
                ('resultado', models.JSONField(blank=True, default=dict, help_text='Registro JSON emitido pelo subcomando')),
                ('mensagem', models.TextField(blank=True)),
            ],
            options={
                'verbose_name': 'Execução da CLI',
                'verbose_name_plural': 'Execuções da CLI',
                'ordering': ['-iniciado_em'],
                'indexes': [models.Index(fields=['subcomando', '-iniciado_em'], name='cli_command_subcoma_5d1f2a_idx'), models.Index(fields=['status'], name='cli_command_status_8b3c41_idx')],
            },
        ),
    ]
