from django.apps import AppConfig


class QuadraticConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'quadratic'
