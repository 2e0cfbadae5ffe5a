# Load the Celery app with Django so classification tasks register on it.
from .celery import app as celery_app

__all__ = ('celery_app',)
