from django.contrib import admin

from core import models


@admin.register(models.RunRecord)
class RunRecordAdmin(admin.ModelAdmin):
    """Saved runs are read-only; they are created by the management commands."""

    ordering = ("-created",)
    list_display = ("command", "suite", "catalog", "passed", "failed", "created")
    list_filter = ("suite", "catalog")
    readonly_fields = (
        "command",
        "suite",
        "catalog",
        "passed",
        "failed",
        "hypothesis_not_met",
        "inconclusive",
        "report",
        "created",
    )

    def has_add_permission(self, request):
        return False
