from django.apps import AppConfig


class CliConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.cli'

    def ready(self):
        """Importa signals quando app estiver pronto."""
        import apps.cli.signals  # noqa
