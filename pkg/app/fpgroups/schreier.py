"""Reidemeister-Schreier presentations of finite-index subgroups.

For coset ``c`` with transversal word ``r_c`` and a generator ``x`` the Schreier
generator is ``s(c, x) = r_c x r_{c.x}^-1``. Those that freely reduce to the empty word
(the spanning tree edges) are dropped; the rest, in order of ``(c, x)``, are the
generators of the subgroup presentation.
"""
from __future__ import annotations

import functools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from core.exceptions import MembershipError
from fpgroups.coset_table import CosetTable, letter_of
from fpgroups.presentation import FpGroup
from fpgroups.words import Word, concat, free_reduce, inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchreierTransversal:
    table: CosetTable
    representatives: tuple[Word, ...]
    generator_index: dict[tuple[int, int], int]
    edges: tuple[tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return len(self.edges)

    def schreier_word(self, coset: int, generator: int) -> Word:
        target = self.table.act(coset, generator)
        reps = self.representatives
        return concat(reps[coset], (generator,), inverse(reps[target]))

    def letter(self, coset: int, generator: int) -> int | None:
        """Subgroup letter of ``s(coset, generator)``; ``None`` on a tree edge."""
        return self.generator_index.get((coset, generator))

    def rewrite_from(self, coset: int, word: Sequence[int]) -> tuple[Word, int]:
        out: list[int] = []
        for letter in word:
            if letter > 0:
                k = self.letter(coset, letter)
                if k is not None:
                    out.append(k)
                coset = self.table.act(coset, letter)
            else:
                previous = self.table.act(coset, letter)
                k = self.letter(previous, -letter)
                if k is not None:
                    out.append(-k)
                coset = previous
        return free_reduce(out), coset


@functools.lru_cache(maxsize=64)
def schreier_transversal(table: CosetTable) -> SchreierTransversal:
    """Breadth-first spanning tree of the coset graph over columns in order."""
    representatives: list[Word | None] = [None] * table.size
    representatives[0] = ()
    tree: set[tuple[int, int]] = set()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for col in range(2 * table.group.ngens):
            letter = letter_of(col)
            d = table.act(c, letter)
            if representatives[d] is None:
                representatives[d] = representatives[c] + (letter,)
                tree.add((c, letter) if letter > 0 else (d, -letter))
                queue.append(d)
    edges = tuple(
        (c, x)
        for c in range(table.size)
        for x in range(1, table.group.ngens + 1)
        if (c, x) not in tree
    )
    index = {edge: k + 1 for k, edge in enumerate(edges)}
    return SchreierTransversal(table, tuple(representatives), index, edges)


def rewrite_in_subgroup(table: CosetTable, word: Sequence[int]) -> Word:
    transversal = schreier_transversal(table)
    rewritten, end = transversal.rewrite_from(0, word)
    if end != 0:
        raise MembershipError(f"{table.group.format(word)} is not in the subgroup")
    return rewritten


@dataclass(frozen=True)
class SubgroupPresentation:
    group: FpGroup
    schreier_words: tuple[Word, ...]
    transversal: SchreierTransversal

    def evaluate(self, word: Sequence[int]) -> Word:
        """The subgroup word spelled out in the parent's generators."""
        return concat(
            *(
                self.schreier_words[x - 1] if x > 0 else inverse(self.schreier_words[-x - 1])
                for x in word
            )
        )


def reidemeister_schreier(table: CosetTable) -> SubgroupPresentation:
    """One relator ``rewrite(r_c R r_c^-1)`` per coset and parent relator, empty ones kept."""
    parent = table.group
    transversal = schreier_transversal(table)
    names = tuple(f"{parent.generator_names[x - 1]}_{c}" for c, x in transversal.edges)
    relators = []
    for c in range(table.size):
        for relator in parent.relators:
            rewritten, end = transversal.rewrite_from(c, relator)
            assert end == c
            relators.append(rewritten)
    words = tuple(transversal.schreier_word(c, x) for c, x in transversal.edges)
    logger.debug(
        "Subgroup of index %d: %d Schreier generators, %d relators",
        table.size,
        len(words),
        len(relators),
    )
    return SubgroupPresentation(FpGroup(names, tuple(relators)), words, transversal)


def free_rank_nielsen_schreier(rank: int, index: int) -> int:
    return 1 + index * (rank - 1)
