import pytest

from core import models


@pytest.mark.django_db
def test_create_run_record():
    """Test a run is stored with its report."""
    record = models.RunRecord.objects.create(
        command="verify thm-c finite-p2", suite="thm-c", passed=42, report={"items": []}
    )

    stored = models.RunRecord.objects.get(id=record.id)
    assert stored.report == {"items": []}
    assert stored.created is not None
    assert stored.ok


@pytest.mark.django_db
def test_run_record_str():
    record = models.RunRecord.objects.create(
        command="verify thm-a finite-p3", passed=9, failed=1, report={}
    )

    assert str(record) == "verify thm-a finite-p3 (9 passed, 1 failed)"
    assert not record.ok


@pytest.mark.django_db
def test_newest_first():
    first = models.RunRecord.objects.create(command="first", report={})
    second = models.RunRecord.objects.create(command="second", report={})

    assert list(models.RunRecord.objects.all()) == [second, first]
