import pytest

from core.exceptions import PresentationSyntaxError, UnknownGeneratorError
from fpgroups.presentation import parse_presentation, parse_word
from fpgroups.words import format_word, free_reduce, inverse, power


def test_free_group_of_rank_one():
    group = parse_presentation("< a | >")

    assert group.generator_names == ("a",)
    assert group.relators == ()


def test_s3_presentation():
    group = parse_presentation("< a, b | a^3, b^2, (a*b)^2 >")

    assert group.relators == ((1, 1, 1), (2, 2), (1, 2, 1, 2))


def test_klein_bottle_presentation():
    group = parse_presentation("< a, b | b*a*b^-1*a >")

    assert group.relators == ((2, 1, -2, 1),)


def test_relators_are_freely_reduced():
    group = parse_presentation("< a, b | a*b*b^-1*a^-1*b^2 >")

    assert group.relators == ((2, 2),)


def test_relation_becomes_relator():
    group = parse_presentation("< a, b | a*b = b*a >")

    assert group.relators == ((1, 2, -1, -2),)


def test_identity_word():
    assert parse_presentation("< a | 1 >").relators == ((),)


def test_round_trip_through_text():
    group = parse_presentation("< x, y | x^4, y^2 = x^2, y*x*y^-1*x >")

    assert parse_presentation(str(group)) == group


def test_syntax_error_carries_position():
    with pytest.raises(PresentationSyntaxError) as error:
        parse_presentation("< a, b | a^ >")

    assert error.value.position == 12


@pytest.mark.parametrize(
    "text", ["a, b | a >", "< a, b | a", "< a, a | a >", "< a | a > b", "< a | a$ >"]
)
def test_malformed_presentations(text):
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(text)


def test_unknown_generator():
    with pytest.raises(UnknownGeneratorError) as error:
        parse_presentation("< a | b^2 >")

    assert error.value.name == "b"


def test_parse_word_with_names():
    assert parse_word("b^2*a*b^-2", ("a", "b")) == (2, 2, 1, -2, -2)


def test_word_helpers():
    word = (1, 2, -1)

    assert free_reduce(word + inverse(word)) == ()
    assert power(word, -2) == (1, -2, -2, -1)
    assert format_word((1, 1, -2), ("a", "b")) == "a^2*b^-1"
    assert format_word((), ("a",)) == "1"
