from django.apps import AppConfig


class CyccohConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'cyccoh'
