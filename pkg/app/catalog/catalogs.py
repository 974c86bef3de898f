"""Catalog lookup and the subgroup searches the sweeps run over."""
from __future__ import annotations

import itertools
import logging
from pathlib import Path
from typing import Callable

from catalog.builtin import BUILTIN_CATALOGS, builtin_catalog
from catalog.entries import CatalogEntry
from catalog.specfiles import load_directory
from core.exceptions import PreconditionError, UnknownCatalogError
from core.limits import algebra_setting
from permgroups.groups import PermGroup, SubgroupHandle, abelianization
from permgroups.subgroups import (
    commutator_subgroup,
    has_abelian_quotient,
    left_transversal,
    quotient_generator,
)
from transfer.pairs import GroupPair, PermPair

logger = logging.getLogger(__name__)


def catalog_dirs() -> list[Path]:
    return [Path(d) for d in algebra_setting("CATALOG_DIRS")]


def available_catalogs() -> list[str]:
    names = list(BUILTIN_CATALOGS)
    for directory in catalog_dirs():
        names += sorted(p.name for p in directory.iterdir() if p.is_dir())
    return names


def load_catalog(name: str) -> list[CatalogEntry]:
    """A built-in catalog, or a directory of ``*.group`` spec files.

    ``name`` is looked up among the built-ins, then as a subdirectory of each
    configured catalog directory, then as a path.
    """
    entries = builtin_catalog(name)
    if entries is None:
        candidates = [d / name for d in catalog_dirs()] + [Path(name)]
        directory = next((c for c in candidates if c.is_dir()), None)
        if directory is None:
            raise UnknownCatalogError(name)
        entries = load_directory(directory)
    logger.info("Loaded catalog %s with %d entries", name, len(entries))
    return sorted(entries, key=lambda e: e.name)


def _search_limit() -> int:
    return algebra_setting("SUBGROUP_SEARCH_MAX_ORDER")


def _search(
    entry: CatalogEntry, keep: Callable[[SubgroupHandle], bool]
) -> list[tuple[str, SubgroupHandle]]:
    """Labelled subgroups ``N`` with ``G/N`` abelian for which ``keep(N)`` holds.

    Such ``N`` contain ``[G, G]`` and correspond to subgroups of ``G^ab``, which need no
    more generators than ``G^ab`` itself; so ``N`` is ``[G, G]`` plus at most that many
    coset representatives. Groups above the search limit fall back to the declared
    subgroups. Labels number the whole abelian family by index, so a subgroup has the
    same label whatever ``keep`` selects.
    """
    if not entry.is_finite:
        raise PreconditionError(f"{entry.name}: subgroup search needs a finite group")
    group = entry.group
    if group.order > _search_limit():
        logger.info("%s exceeds the search limit, using declared subgroups", entry.name)
        found = [group.subgroup(spec.generators) for spec in entry.subgroups]
        found = [subgroup for subgroup in found if has_abelian_quotient(group, subgroup)]
    else:
        derived = commutator_subgroup(group)
        representatives = left_transversal(group, derived).representatives
        rank = abelianization(group).group.ngens
        found = [
            group.subgroup(derived.generators + combination)
            for k in range(rank + 1)
            for combination in itertools.combinations_with_replacement(representatives, k)
        ]

    declared = {
        group.subgroup(spec.generators).elements(): spec.label for spec in entry.subgroups
    }
    unique: dict[frozenset, SubgroupHandle] = {}
    for subgroup in found:
        unique.setdefault(subgroup.elements(), subgroup)
    rows = sorted(
        ((subgroup.index, sorted(elements), subgroup) for elements, subgroup in unique.items()),
        key=lambda row: (row[0], row[1]),
    )

    labelled = []
    for index, group_rows in itertools.groupby(rows, key=lambda row: row[0]):
        for k, (_, elements, subgroup) in enumerate(group_rows, start=1):
            if keep(subgroup):
                label = declared.get(frozenset(elements), f"index{index}.{k}")
                labelled.append((label, subgroup))
    return labelled


def _cyclic_quotient(group: PermGroup, subgroup: SubgroupHandle) -> bool:
    try:
        quotient_generator(group, subgroup)
    except PreconditionError:
        return False
    return True


def cocyclic_subgroups(entry: CatalogEntry) -> list[tuple[str, SubgroupHandle]]:
    """Every normal ``N`` with ``G/N`` cyclic, labelled and ordered by index."""
    labelled = _search(entry, lambda subgroup: _cyclic_quotient(entry.group, subgroup))
    logger.debug("%s has %d co-cyclic subgroups", entry.name, len(labelled))
    return labelled


def abelian_quotient_subgroups(entry: CatalogEntry) -> list[tuple[str, SubgroupHandle]]:
    """Every ``N`` with ``G/N`` abelian, labelled and ordered by index."""
    labelled = _search(entry, lambda subgroup: True)
    logger.debug("%s has %d subgroups with abelian quotient", entry.name, len(labelled))
    return labelled


def cocyclic_pairs(entry: CatalogEntry) -> list[GroupPair]:
    return [
        PermPair(entry.group, subgroup, f"{entry.name}/{label}")
        for label, subgroup in cocyclic_subgroups(entry)
    ]


def abelian_quotient_pairs(entry: CatalogEntry) -> list[GroupPair]:
    return [
        PermPair(entry.group, subgroup, f"{entry.name}/{label}")
        for label, subgroup in abelian_quotient_subgroups(entry)
    ]


def catalog_pairs(entries: list[CatalogEntry], max_cosets: int | None = None) -> list[GroupPair]:
    """The pairs a sweep visits: co-cyclic pairs of finite entries, declared pairs otherwise."""
    pairs: list[GroupPair] = []
    for entry in entries:
        if entry.is_finite:
            pairs += cocyclic_pairs(entry)
        else:
            pairs += entry.pairs(max_cosets)
    return pairs
