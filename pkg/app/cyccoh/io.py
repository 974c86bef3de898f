"""Module files::

    n=3
    group
    free 2
    sigma
    2 2
    0 -1
    1 -1
"""
from __future__ import annotations

from core.exceptions import SpecFileError
from cyccoh.modules import CyclicModule, from_matrix
from exactalg.io import content_lines, format_matrix, parse_group_lines, parse_matrix_lines


def parse_order_line(lines: list[str]) -> tuple[int, list[str]]:
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise SpecFileError("Module files start with an 'n=<order>' line.")
    try:
        return int(lines[0].split("=", 1)[1]), lines[1:]
    except ValueError as exc:
        raise SpecFileError(f"Bad order line {lines[0]!r}") from exc


def expect_keyword(lines: list[str], keyword: str, *aliases: str) -> list[str]:
    if not lines or lines[0] not in (keyword, *aliases):
        found = lines[0] if lines else "end of file"
        raise SpecFileError(f"Expected {keyword!r}, found {found!r}")
    return lines[1:]


def parse_module_lines(lines: list[str]) -> tuple[CyclicModule, list[str]]:
    n, lines = parse_order_line(lines)
    try:
        group, lines = parse_group_lines(expect_keyword(lines, "group"))
        sigma, lines = parse_matrix_lines(expect_keyword(lines, "sigma"))
        return from_matrix(group, sigma, n), lines
    except ValueError as exc:
        raise SpecFileError(str(exc)) from exc


def parse_module(text: str) -> CyclicModule:
    module, rest = parse_module_lines(content_lines(text))
    if rest:
        raise SpecFileError(f"Trailing content in module file: {rest[0]!r}")
    return module


def format_group(group) -> str:
    lines = []
    if group.torsion:
        lines.append("torsion " + " ".join(map(str, group.torsion)))
    lines.append(f"free {group.free_rank}")
    return "\n".join(lines) + "\n"


def format_module(module: CyclicModule) -> str:
    return (
        f"n={module.n}\ngroup\n{format_group(module.group)}"
        f"sigma\n{format_matrix(module.sigma.matrix)}"
    )
