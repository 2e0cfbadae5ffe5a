"""
Celery configuration for factorlab.
"""
import os
from celery import Celery
from celery.schedules import crontab

# Set the default Django settings module for the 'celery' program.
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'factorlab.settings')

app = Celery('factorlab')

# Using a string here means the worker doesn't have to serialize
# the configuration object to child processes.
app.config_from_object('django.conf:settings', namespace='CELERY')

# Load task modules from all registered Django apps.
app.autodiscover_tasks()

# Celery Beat schedule for periodic tasks
app.conf.beat_schedule = {
    'verify-theorem-regression': {
        'task': 'classification.tasks.verify_theorem_regression',
        'schedule': crontab(hour=3, minute=0),  # Run daily at 3:00 AM
    },
}

# Timezone configuration
app.conf.timezone = 'UTC'

# Task result settings
app.conf.result_expires = 3600  # Results expire after 1 hour

# Task routing
app.conf.task_routes = {
    'classification.tasks.check_group_strong_cfs': {'queue': 'classification'},
    'classification.tasks.verify_theorem_regression': {'queue': 'maintenance'},
}
