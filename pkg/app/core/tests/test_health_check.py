from django.urls import reverse

from cli import __version__


def test_health_check(api_client):
    response = api_client.get(reverse("health-check"))

    assert response.status_code == 200
    assert response.json() == {"status": "ok", "version": __version__}
