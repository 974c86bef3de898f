"""Catalog entries: a group on one backend with named subgroups of finite index."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Union

from core.exceptions import PreconditionError
from fpgroups.coset_table import todd_coxeter
from fpgroups.presentation import FpGroup
from fpgroups.words import Word
from permgroups.groups import PermGroup
from permgroups.permutation import Permutation
from transfer.pairs import FpPair, GroupPair, PermPair

logger = logging.getLogger(__name__)

Generator = Union[Permutation, Word]


@dataclass(frozen=True)
class SubgroupSpec:
    label: str
    generators: tuple[Generator, ...]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    backend: str
    group: PermGroup | FpGroup = field(compare=False)
    subgroups: tuple[SubgroupSpec, ...] = ()
    provenance: str = ""

    @property
    def is_finite(self) -> bool:
        return self.backend == "perm"

    def subgroup(self, label: str) -> SubgroupSpec:
        for spec in self.subgroups:
            if spec.label == label:
                return spec
        known = ", ".join(s.label for s in self.subgroups) or "none"
        raise PreconditionError(f"{self.name} has no subgroup {label!r} (known: {known})")

    def pair(self, label: str, max_cosets: int | None = None) -> GroupPair:
        spec = self.subgroup(label)
        name = f"{self.name}/{spec.label}"
        if self.is_finite:
            return PermPair(self.group, self.group.subgroup(spec.generators), name)
        return FpPair(self.group, spec.generators, name, max_cosets)

    def pairs(self, max_cosets: int | None = None) -> list[GroupPair]:
        return [self.pair(spec.label, max_cosets) for spec in self.subgroups]

    def validate(self, max_cosets: int | None = None):
        """Every declared subgroup must have finite index."""
        for spec in self.subgroups:
            if self.is_finite:
                subgroup = self.group.subgroup(spec.generators)
                if self.group.order % subgroup.order:
                    raise PreconditionError(f"{self.name}/{spec.label} breaks Lagrange")
            else:
                table = todd_coxeter(self.group, spec.generators, max_cosets)
                logger.debug("%s/%s has index %d", self.name, spec.label, table.size)
