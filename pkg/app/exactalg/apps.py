from django.apps import AppConfig


class ExactalgConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exactalg'
