from fractions import Fraction

import pytest

from core.exceptions import PreconditionError
from exactalg.abelian import AbHom, FgAbGroup
from mackey.ab import ab_datum
from mackey.constructions import (
    DatumSequence,
    MackeyMorphism,
    direct_sum_data,
    direct_sum_sequence,
    multiplication_sequence,
    trivial_datum,
    verify_euler_mult,
)
from mackey.datum import euler_char, validate_datum


def test_direct_sum_is_valid(s3_a3):
    datum = direct_sum_data([trivial_datum(2), ab_datum(s3_a3)])

    assert validate_datum(datum).is_valid
    assert datum.x1.group == FgAbGroup((3,), 1)


def test_direct_sum_sequence(s3_a3):
    report = verify_euler_mult(direct_sum_sequence(trivial_datum(2), ab_datum(s3_a3)))

    assert report.holds
    assert (report.chi_a, report.chi_b, report.chi_c) == (Fraction(1, 2), Fraction(1, 2), 1)


def test_multiplication_by_two():
    sequence = multiplication_sequence(trivial_datum(2), 2)
    report = verify_euler_mult(sequence)

    assert sequence.c.x1.group == FgAbGroup((2,))
    assert report.holds
    assert report.chi_c == 1


def test_multiplication_on_free_group_kernel(f2_kernel):
    report = verify_euler_mult(multiplication_sequence(ab_datum(f2_kernel), 3))

    assert report.verdict == "pass"
    assert report.chi_b == Fraction(1, 2)


def test_finite_data_cannot_be_multiplied(s3_a3):
    with pytest.raises(PreconditionError):
        multiplication_sequence(ab_datum(s3_a3), 2)


def test_zero_maps_are_not_exact():
    datum = trivial_datum(2)
    zero = AbHom.zero(datum.xg, datum.xg)
    sequence = DatumSequence(
        datum, datum, datum, MackeyMorphism(zero, zero), MackeyMorphism(zero, zero)
    )

    assert sequence.problems() == [
        "bottom level is not short exact",
        "top level is not short exact",
    ]
    with pytest.raises(PreconditionError):
        verify_euler_mult(sequence)


def test_euler_characteristic_of_sum_is_product(q8_pair):
    a, c = ab_datum(q8_pair), trivial_datum(2, rank=2)

    assert euler_char(direct_sum_data([a, c])) == euler_char(a) * euler_char(c)
