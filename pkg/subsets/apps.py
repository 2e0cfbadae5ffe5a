from django.apps import AppConfig


class SubsetsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "subsets"
