from django.apps import AppConfig


class CoreConfig(AppConfig):
    name = 'provclose.core'
    verbose_name = 'provclose: pro-V closures of cyclic subgroups'
