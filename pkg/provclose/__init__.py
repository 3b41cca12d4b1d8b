# The Celery app lives in provclose.celery and is imported by provclose.core.tasks. It is not
# imported here, so the closure library can be used without a Django configuration.
