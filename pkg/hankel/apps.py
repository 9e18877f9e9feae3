from django.apps import AppConfig


class HankelConfig(AppConfig):
    name = 'hankel'
    verbose_name = 'Explicit Hankel inversion'
