from django.apps import AppConfig


class MackeyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'mackey'
