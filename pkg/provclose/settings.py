from __future__ import annotations

from pathlib import Path

from configurations import Configuration, values


class ProvcloseMixin:
    BASE_DIR = Path(__file__).resolve(strict=True).parent.parent

    INSTALLED_APPS = [
        'provclose.core.apps.CoreConfig',
        'rest_framework',
    ]

    USE_TZ = True
    DATABASES: dict = {}

    # Catalog of finite groups used by the separation oracle; the built-in catalog when unset
    PROVCLOSE_CATALOG = values.Value(None, environ_prefix=None)
    PROVCLOSE_ELEMENT_CAP = values.PositiveIntegerValue(5000, environ_prefix=None)
    PROVCLOSE_HOM_CAP = values.PositiveIntegerValue(10_000_000, environ_prefix=None)
    # Celery tasks each group search is split into; 0 searches in-process
    PROVCLOSE_SEARCH_WORKERS = values.IntegerValue(0, environ_prefix=None)
    PROVCLOSE_LOG_LEVEL = values.Value('WARNING', environ_prefix=None)

    CELERY_TASK_SERIALIZER = 'json'
    CELERY_RESULT_SERIALIZER = 'json'
    CELERY_ACCEPT_CONTENT = ['json']

    @classmethod
    def setup(cls):
        super().setup()
        cls.LOGGING = {
            'version': 1,
            'disable_existing_loggers': False,
            'formatters': {
                'verbose': {'format': '{levelname} {asctime} {name}: {message}', 'style': '{'},
            },
            'handlers': {
                'console': {'class': 'logging.StreamHandler', 'formatter': 'verbose'},
            },
            'loggers': {
                'provclose': {
                    'handlers': ['console'],
                    'level': cls.PROVCLOSE_LOG_LEVEL,
                    'propagate': False,
                },
            },
        }


class DevelopmentConfiguration(ProvcloseMixin, Configuration):
    DEBUG = True
    SECRET_KEY = 'provclose-development-key'
    CELERY_TASK_ALWAYS_EAGER = True
    CELERY_BROKER_URL = 'memory://'
    CELERY_RESULT_BACKEND = 'cache+memory://'


class TestingConfiguration(ProvcloseMixin, Configuration):
    SECRET_KEY = 'provclose-testing-key'
    CELERY_TASK_ALWAYS_EAGER = True
    CELERY_BROKER_URL = 'memory://'
    CELERY_RESULT_BACKEND = 'cache+memory://'


class ProductionConfiguration(ProvcloseMixin, Configuration):
    SECRET_KEY = values.SecretValue()
    CELERY_BROKER_URL = values.Value(environ_required=True)
    CELERY_RESULT_BACKEND = values.Value(environ_required=True)
