from django.apps import AppConfig


class FpgroupsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'fpgroups'
