from django.db import models


class RunRecord(models.Model):
    """A saved command run: what was asked, how it came out and the full report."""

    command = models.CharField(max_length=255)
    suite = models.CharField(max_length=32, blank=True)
    catalog = models.CharField(max_length=255, blank=True)
    passed = models.PositiveIntegerField(default=0)
    failed = models.PositiveIntegerField(default=0)
    hypothesis_not_met = models.PositiveIntegerField(default=0)
    inconclusive = models.PositiveIntegerField(default=0)
    report = models.JSONField()
    created = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ("-created", "-id")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def __str__(self):
        return f"{self.command} ({self.passed} passed, {self.failed} failed)"
