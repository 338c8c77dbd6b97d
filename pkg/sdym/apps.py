from django.apps import AppConfig


class SdymConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'sdym'
    verbose_name = 'Self-dual Yang-Mills symmetry engine'
