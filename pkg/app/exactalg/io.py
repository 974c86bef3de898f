"""Text formats for matrices and abelian groups.

Matrix: a ``rows cols`` header followed by ``rows`` lines of integers.
Group: ``torsion d1 d2 ...`` and ``free r`` lines (either may be omitted).
"""
from __future__ import annotations

from typing import Iterator

from exactalg.abelian import FgAbGroup
from exactalg.matrix import IntMatrix


def _content_lines(text: str) -> Iterator[str]:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def parse_matrix_lines(lines: list[str]) -> tuple[IntMatrix, list[str]]:
    """Parse one matrix from the head of ``lines``; return it with the remaining lines."""
    if not lines:
        raise ValueError("Missing matrix header.")
    try:
        rows, cols = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"Bad matrix header {lines[0]!r}, expected 'rows cols'.") from exc
    body = lines[1 : 1 + rows]
    if len(body) != rows:
        raise ValueError(f"Matrix declares {rows} rows, found {len(body)}.")
    entries = [[int(x) for x in line.split()] for line in body]
    return IntMatrix.from_rows(entries, cols), lines[1 + rows :]


def parse_matrix(text: str) -> IntMatrix:
    matrix, rest = parse_matrix_lines(list(_content_lines(text)))
    if rest:
        raise ValueError(f"Trailing content after matrix: {rest[0]!r}")
    return matrix


def format_matrix(matrix: IntMatrix) -> str:
    return f"{matrix.rows} {matrix.cols}\n{matrix}\n" if matrix.rows else f"0 {matrix.cols}\n"


def parse_group_lines(lines: list[str]) -> tuple[FgAbGroup, list[str]]:
    torsion: tuple[int, ...] = ()
    free = 0
    while lines and lines[0].split()[0] in ("torsion", "free"):
        key, *values = lines[0].split()
        if key == "torsion":
            torsion = tuple(int(v) for v in values)
        else:
            free = int(values[0]) if values else 0
        lines = lines[1:]
    return FgAbGroup(torsion, free), lines


def content_lines(text: str) -> list[str]:
    return list(_content_lines(text))
