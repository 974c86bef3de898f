import pytest

from core.exceptions import SpecFileError
from exactalg.abelian import FgAbGroup
from mackey.ab import ab_datum
from mackey.constructions import trivial_datum
from mackey.datum import euler_char
from mackey.io import format_datum, parse_datum

TRIVIAL = """
# Z with trivial action of C_2
n=2
group
free 1
sigma
1 1
1
XG
free 1
i
1 1
1
t
1 1
2
"""


def test_parse_trivial_datum():
    assert parse_datum(TRIVIAL) == trivial_datum(2)


def test_round_trip(s3_a3):
    datum = ab_datum(s3_a3)
    parsed = parse_datum(format_datum(datum))

    assert parsed == datum
    assert parsed.xg == FgAbGroup((2,))
    assert euler_char(parsed) == 1


@pytest.mark.parametrize(
    "text",
    [
        TRIVIAL.replace("t\n1 1\n2\n", ""),
        TRIVIAL.replace("XG", "bottom"),
        TRIVIAL + "extra\n",
    ],
)
def test_bad_files(text):
    with pytest.raises(SpecFileError):
        parse_datum(text)


def test_written_files_use_the_xg_block(s3_a3):
    text = format_datum(ab_datum(s3_a3))

    assert "\nXG\ntorsion 2\n" in text
    assert parse_datum(text) == ab_datum(s3_a3)


def test_top_block_is_still_read():
    assert parse_datum(TRIVIAL.replace("XG", "top")) == trivial_datum(2)
