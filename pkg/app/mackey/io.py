"""Datum files: a module file followed by the group at the top level and the two maps::

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

Older files name the XG block ``top``.
"""
from __future__ import annotations

from core.exceptions import SpecFileError
from cyccoh.io import expect_keyword, format_group, format_module, parse_module_lines
from exactalg.abelian import AbHom
from exactalg.io import content_lines, format_matrix, parse_group_lines, parse_matrix_lines
from mackey.datum import SectionMackeyDatum


def parse_datum(text: str) -> SectionMackeyDatum:
    """Parse a datum; the axioms are not checked here."""
    x1, lines = parse_module_lines(content_lines(text))
    try:
        xg, lines = parse_group_lines(expect_keyword(lines, "XG", "top"))
        i, lines = parse_matrix_lines(expect_keyword(lines, "i"))
        t, lines = parse_matrix_lines(expect_keyword(lines, "t"))
        datum = SectionMackeyDatum(x1, xg, AbHom(xg, x1.group, i), AbHom(x1.group, xg, t))
    except ValueError as exc:
        raise SpecFileError(str(exc)) from exc
    if lines:
        raise SpecFileError(f"Trailing content in datum file: {lines[0]!r}")
    return datum


def format_datum(datum: SectionMackeyDatum) -> str:
    return (
        f"{format_module(datum.x1)}XG\n{format_group(datum.xg)}"
        f"i\n{format_matrix(datum.i.matrix)}t\n{format_matrix(datum.t.matrix)}"
    )
