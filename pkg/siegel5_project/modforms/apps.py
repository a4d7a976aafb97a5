from django.apps import AppConfig


class ModformsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'modforms'
    verbose_name = 'Siegel modular forms of level 5'
