import pytest
from django.urls import reverse
from pytest_django.asserts import assertContains

from core.models import RunRecord


@pytest.fixture
def run():
    return RunRecord.objects.create(
        command="verify thm-a finite-p2", suite="thm-a", catalog="finite-p2", report={}
    )


@pytest.mark.django_db
def test_runs_list(client, authenticated_admin, run):
    """Test runs are listed on page"""
    url = reverse("admin:core_runrecord_changelist")
    res = client.get(url)

    assertContains(res, run.command)


@pytest.mark.django_db
def test_run_page(client, authenticated_admin, run):
    url = reverse("admin:core_runrecord_change", args=[run.id])
    res = client.get(url)

    assert res.status_code == 200


@pytest.mark.django_db
def test_runs_cannot_be_added(client, authenticated_admin):
    url = reverse("admin:core_runrecord_add")
    res = client.get(url)

    assert res.status_code == 403
