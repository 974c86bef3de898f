import pytest

from core.exceptions import GroupOrderOverflow, MembershipError
from exactalg.abelian import FgAbGroup
from permgroups import standard
from permgroups.groups import PermGroup, abelianization, enumerate_elements
from permgroups.permutation import Permutation


def test_trivial_group_has_one_element():
    assert len(enumerate_elements(PermGroup([], degree=3))) == 1


def test_s3_has_six_elements(s3):
    assert s3.order == 6


def test_q8_regular_representation(q8):
    assert q8.order == 8
    assert q8.degree == 8
    assert not q8.is_abelian()


def test_cap_exceeded():
    with pytest.raises(GroupOrderOverflow):
        standard.symmetric(5).enumerate(cap=100)


def test_stored_words_evaluate_to_their_elements(q8):
    for element, word in q8.enumerate().items():
        assert q8.evaluate(word) == element


def test_breadth_first_order_starts_with_identity(s3):
    assert s3.elements()[0].is_identity()


def test_word_of_foreign_element(s3):
    with pytest.raises(MembershipError):
        s3.word_of(Permutation.parse("(0 1)", 4))


def test_subgroup_generators_must_belong_to_parent():
    with pytest.raises(MembershipError):
        standard.cyclic(3).subgroup([Permutation.parse("(0 1)", 3)])


@pytest.mark.parametrize(
    "factory, order",
    [
        (lambda: standard.dihedral(5), 10),
        (lambda: standard.quaternion(16), 16),
        (standard.modular16, 16),
        (standard.heisenberg, 27),
        (standard.extraspecial27_exponent9, 27),
        (standard.alternating4, 12),
        (lambda: standard.product_of_cyclics(2, 4), 8),
    ],
)
def test_standard_group_orders(factory, order):
    assert factory().order == order


@pytest.mark.parametrize(
    "factory, torsion",
    [
        (lambda: standard.symmetric(3), (2,)),
        (lambda: standard.quaternion(8), (2, 2)),
        (lambda: standard.cyclic(6), (6,)),
        (lambda: standard.symmetric(4), (2,)),
        (standard.alternating4, (3,)),
        (lambda: standard.dihedral(4), (2, 2)),
        (standard.modular16, (2, 4)),
        (standard.heisenberg, (3, 3)),
    ],
)
def test_abelianization(factory, torsion):
    assert abelianization(factory()).group == FgAbGroup(torsion)


def test_abelianization_kills_commutators(q8):
    ab = abelianization(q8)
    i, j = q8.generators
    commutator = i * j * i.inverse() * j.inverse()

    assert ab.group.is_zero(ab.project(commutator))
    assert ab.project(i * j) == ab.group.add(ab.project(i), ab.project(j))


def test_abelianization_of_group_without_generators():
    assert abelianization(PermGroup([], degree=2)).group.is_trivial
