from django.apps import AppConfig


class FreeprodConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.freeprod'
