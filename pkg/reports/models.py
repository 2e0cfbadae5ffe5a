from django.db import models
from django.utils import timezone


class VerificationRun(models.Model):
    """Audit record of a command invocation made with --record."""

    command = models.CharField(max_length=50)
    inputs = models.JSONField(default=dict)
    verdict = models.CharField(max_length=20)
    payload = models.JSONField()
    version = models.CharField(max_length=20)
    created_at = models.DateTimeField(default=timezone.now)

    class Meta:
        ordering = ["-created_at", "-id"]

    def __str__(self):
        return f"{self.command} {self.verdict} ({self.created_at:%Y-%m-%d %H:%M})"
