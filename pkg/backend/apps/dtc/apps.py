from django.apps import AppConfig


class DtcConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.dtc'
