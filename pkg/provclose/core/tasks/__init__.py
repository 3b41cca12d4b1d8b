import celery
from celery.utils.log import get_task_logger

# Bind shared tasks to the project's Celery app
from provclose.celery import app as _celery_app  # noqa: F401

logger = get_task_logger(__name__)


class ProvcloseCeleryTask(celery.Task):
    """
    A base class for provclose celery tasks.

    NOTE: This task assumes that all arguments are passed using kwargs, so they can be logged by
    name. If an argument is passed positionally, this task will fail.
    """

    def __call__(self, *args, **kwargs):
        """Wrap the inherited `__call__` method to log the task arguments."""
        if args:
            raise TypeError(f'{self.name} takes keyword arguments only')

        described = ', '.join(f'{key}={value!r}' for key, value in sorted(kwargs.items()))
        logger.info(f'Begin {self.name}({described})')
        return self.run(**kwargs)

    def on_failure(self, exc, celery_task_id, args, kwargs, einfo):
        logger.error(f'{self.name} {celery_task_id} failed: {exc}')

    def on_success(self, retval, celery_task_id, args, kwargs):
        logger.info(f'{self.name} {celery_task_id} finished with {retval!r}')
