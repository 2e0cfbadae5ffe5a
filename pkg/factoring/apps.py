from django.apps import AppConfig


class FactoringConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "factoring"
