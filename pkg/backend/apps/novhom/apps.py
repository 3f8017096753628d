from django.apps import AppConfig


class NovhomConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.novhom'
