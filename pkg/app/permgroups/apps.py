from django.apps import AppConfig


class PermgroupsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'permgroups'
