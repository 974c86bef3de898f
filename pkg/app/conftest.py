import random

import pytest
from django.contrib.auth import get_user_model
from rest_framework.test import APIClient

from fpgroups.presentation import parse_presentation
from permgroups import standard
from permgroups.permutation import Permutation
from transfer.pairs import FpPair, PermPair


@pytest.fixture()
def authenticated_admin(client):
    admin = get_user_model().objects.create_superuser(
        username="admin", email="admin@example.com", password="AJoDU6xth5Nh"
    )

    client.force_login(admin)
    return admin


@pytest.fixture
def api_client():
    return APIClient()


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def s3():
    return standard.symmetric(3)


@pytest.fixture
def a3(s3):
    return s3.subgroup([Permutation.from_cycles([[0, 1, 2]], 3)])


@pytest.fixture
def q8():
    return standard.quaternion(8)


@pytest.fixture
def q8_i(q8):
    """The cyclic subgroup generated by ``i``, of index 2."""
    return q8.subgroup([q8.generators[0]])


@pytest.fixture
def s3_a3(s3, a3):
    return PermPair(s3, a3, "S3/A3")


@pytest.fixture
def q8_pair(q8, q8_i):
    return PermPair(q8, q8_i, "Q8/<i>")


@pytest.fixture
def f2_kernel():
    """The kernel of ``F2 -> Z/2`` sending ``a`` to 0 and ``b`` to 1."""
    f2 = parse_presentation("< a, b | >")
    words = [f2.parse_word(w) for w in ("a", "b*a*b^-1", "b^2")]
    return FpPair(f2, words, "F2/ker")
