"""Group spec files, one entry per file::

    # the symmetric group on three points
    perm degree=3
    (0 1)
    (0 1 2)
    subgroup A3
    (0 1 2)

    fp
    < a, b | b*a*b^-1*a >
    subgroup
    a, b^2

A keyword line opens a block and the lines after it, up to the next keyword, belong to
it: generators after ``perm`` (one per line), the presentation after ``fp`` and the
generators after ``subgroup``. The same values may be given on the keyword line
itself, as in ``perm 3``, ``fp < a, b | >``, ``generators (0 1); (0 1 2)`` or
``subgroup index2 a; b^2``. Permutations are separated by ``;`` or line breaks, words
also by ``,``.

A subgroup is labelled by the single name after ``subgroup``; unlabelled ones are
``U1``, ``U2``, ... by position. ``name`` defaults to the file name and
``provenance`` is free text.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from catalog.entries import CatalogEntry, SubgroupSpec
from core.exceptions import SpecFileError
from exactalg.io import content_lines
from fpgroups.presentation import parse_presentation
from permgroups.groups import PermGroup
from permgroups.permutation import Permutation

KEYS = ("name", "provenance", "perm", "fp", "generators", "subgroup")
SINGLE_KEYS = ("name", "provenance", "perm", "fp", "generators")

_LABEL_RE = re.compile(r"[A-Za-z_][\w.\-]*")
_PERM_SEPARATORS = re.compile(r"[;\n]")
_WORD_SEPARATORS = re.compile(r"[;,\n]")


@dataclass
class _Block:
    key: str
    head: str
    lines: list[str] = field(default_factory=list)

    @property
    def body(self) -> str:
        return "\n".join(([self.head] if self.head else []) + self.lines)


def _blocks(text: str) -> list[_Block]:
    blocks: list[_Block] = []
    for line in content_lines(text):
        key, _, value = line.partition(" ")
        if key in KEYS:
            blocks.append(_Block(key, value.strip()))
        elif blocks and blocks[-1].key in ("perm", "fp", "generators", "subgroup"):
            blocks[-1].lines.append(line)
        else:
            raise SpecFileError(f"Unknown key {key!r}.")
    return blocks


def _split(text: str, separators: re.Pattern) -> list[str]:
    return [part.strip() for part in separators.split(text) if part.strip()]


def _degree(head: str, name: str) -> int:
    value = head.removeprefix("degree=").strip()
    try:
        return int(value)
    except ValueError as exc:
        raise SpecFileError(f"{name}: bad degree {head!r}") from exc


def _subgroup(block: _Block, position: int) -> tuple[str, str]:
    """The label and the generator text of a ``subgroup`` block."""
    label, _, rest = block.head.partition(" ")
    if _LABEL_RE.fullmatch(label):
        return label, "\n".join([rest.strip(), *block.lines])
    return f"U{position}", block.body


def parse_entry(text: str, default_name: str = "") -> CatalogEntry:
    fields: dict[str, _Block] = {}
    subgroups: list[_Block] = []
    for block in _blocks(text):
        if block.key == "subgroup":
            subgroups.append(block)
        elif block.key in fields:
            raise SpecFileError(f"Duplicate {block.key!r} line.")
        else:
            fields[block.key] = block
    name = fields["name"].head if "name" in fields else default_name
    if not name:
        raise SpecFileError("The entry has no name.")
    if ("perm" in fields) == ("fp" in fields):
        raise SpecFileError(f"{name}: exactly one of 'perm' and 'fp' is required.")

    generators = fields["generators"].body if "generators" in fields else ""
    if "perm" in fields:
        degree = _degree(fields["perm"].head, name)

        def parse(text: str) -> tuple[Permutation, ...]:
            return tuple(
                Permutation.parse(p, degree) for p in _split(text, _PERM_SEPARATORS)
            )

        perm_lines = "\n".join(fields["perm"].lines)
        group = PermGroup(parse(f"{generators}\n{perm_lines}"), degree)
        backend = "perm"
    else:
        group = parse_presentation(" ".join([fields["fp"].head, *fields["fp"].lines]))

        def parse(text: str):
            return tuple(group.parse_word(w) for w in _split(text, _WORD_SEPARATORS))

        backend = "fp"
    specs = tuple(
        SubgroupSpec(label, parse(body))
        for label, body in (_subgroup(b, k) for k, b in enumerate(subgroups, start=1))
    )
    if len({s.label for s in specs}) != len(specs):
        raise SpecFileError(f"{name}: duplicate subgroup labels.")
    provenance = fields["provenance"].head if "provenance" in fields else ""
    return CatalogEntry(name, backend, group, specs, provenance)


def load_entry(path: Path | str) -> CatalogEntry:
    path = Path(path)
    try:
        entry = parse_entry(path.read_text(), default_name=path.stem)
        entry.validate()
    except (SpecFileError, ValueError, OSError) as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    return entry


def load_directory(path: Path | str) -> list[CatalogEntry]:
    return [load_entry(p) for p in sorted(Path(path).glob("*.group"))]
