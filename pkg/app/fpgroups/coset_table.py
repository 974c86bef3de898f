"""Todd-Coxeter coset enumeration, HLT strategy.

Cosets are right cosets ``U w``; coset 0 is ``U``. Column ``2i`` of a table holds the
action of generator ``i + 1`` and column ``2i + 1`` the action of its inverse.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from core.exceptions import ConsistencyError, CosetLimitExceeded
from core.limits import algebra_setting
from fpgroups.presentation import FpGroup
from fpgroups.words import Word, free_reduce

logger = logging.getLogger(__name__)


def column(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


def letter_of(col: int) -> int:
    return col // 2 + 1 if col % 2 == 0 else -(col // 2 + 1)


@dataclass(frozen=True)
class CosetTable:
    group: FpGroup
    subgroup_words: tuple[Word, ...]
    action: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.action)

    def act(self, coset: int, letter: int) -> int:
        return self.action[coset][column(letter)]

    def trace(self, coset: int, word: Sequence[int]) -> int:
        for letter in word:
            coset = self.action[coset][column(letter)]
        return coset

    def permutation(self, letter: int) -> tuple[int, ...]:
        col = column(letter)
        return tuple(row[col] for row in self.action)

    def contains(self, word: Sequence[int]) -> bool:
        return self.trace(0, word) == 0

    def validate(self) -> list[str]:
        """Problems with the table; empty for a valid complete table."""
        problems = []
        for c, row in enumerate(self.action):
            if len(row) != 2 * self.group.ngens:
                problems.append(f"coset {c} has {len(row)} columns")
                continue
            for col, d in enumerate(row):
                if not 0 <= d < self.size or self.action[d][col ^ 1] != c:
                    problems.append(f"coset {c} column {col} is not inverted by column {col ^ 1}")
            for relator in self.group.relators:
                if self.trace(c, relator) != c:
                    problems.append(f"relator {self.group.format(relator)} moves coset {c}")
        for word in self.subgroup_words:
            if self.trace(0, word) != 0:
                problems.append(f"subgroup word {self.group.format(word)} moves coset 0")
        return problems

    def is_valid(self) -> bool:
        return not self.validate()


class _Enumeration:
    def __init__(self, group: FpGroup, max_cosets: int):
        self.group = group
        self.width = 2 * group.ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.width]
        self.p = [0]
        self.live = 1
        self.coincidences = 0

    def define(self, alpha: int, col: int):
        if self.live >= self.max_cosets:
            raise CosetLimitExceeded(self.max_cosets)
        beta = len(self.table)
        self.table.append([None] * self.width)
        self.p.append(beta)
        self.live += 1
        self.table[alpha][col] = beta
        self.table[beta][col ^ 1] = alpha

    def rep(self, k: int) -> int:
        root = k
        while self.p[root] != root:
            root = self.p[root]
        while self.p[k] != root:
            self.p[k], k = root, self.p[k]
        return root

    def merge(self, k: int, lam: int, queue: deque):
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            low, high = min(phi, psi), max(phi, psi)
            self.p[high] = low
            self.live -= 1
            queue.append(high)

    def coincidence(self, alpha: int, beta: int):
        self.coincidences += 1
        queue: deque[int] = deque()
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.popleft()
            for col in range(self.width):
                delta = self.table[gamma][col]
                if delta is None:
                    continue
                self.table[delta][col ^ 1] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if self.table[mu][col] is not None:
                    self.merge(nu, self.table[mu][col], queue)
                elif self.table[nu][col ^ 1] is not None:
                    self.merge(mu, self.table[nu][col ^ 1], queue)
                else:
                    self.table[mu][col] = nu
                    self.table[nu][col ^ 1] = mu

    def scan_and_fill(self, alpha: int, word: Word):
        table = self.table
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][column(word[i])] is not None:
                f = table[f][column(word[i])]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][column(-word[j])] is not None:
                b = table[b][column(-word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][column(word[i])] = b
                table[b][column(-word[i])] = f
                return
            self.define(f, column(word[i]))

    def run(self, subgroup_words: Sequence[Word]):
        for word in subgroup_words:
            self.scan_and_fill(0, word)
        alpha = 0
        while alpha < len(self.table):
            if self.p[alpha] == alpha:
                for relator in self.group.relators:
                    self.scan_and_fill(alpha, relator)
                    if self.p[alpha] < alpha:
                        break
                if self.p[alpha] == alpha:
                    for col in range(self.width):
                        if self.table[alpha][col] is None:
                            self.define(alpha, col)
            alpha += 1

    def standardized_action(self) -> tuple[tuple[int, ...], ...]:
        """Live cosets renumbered in breadth-first order from coset 0."""
        numbering = {0: 0}
        order = [0]
        queue = deque(order)
        while queue:
            c = queue.popleft()
            for col in range(self.width):
                d = self.rep(self.table[c][col])
                if d not in numbering:
                    numbering[d] = len(order)
                    order.append(d)
                    queue.append(d)
        return tuple(
            tuple(numbering[self.rep(self.table[c][col])] for col in range(self.width))
            for c in order
        )


def default_max_cosets() -> int:
    return algebra_setting("MAX_COSETS")


def todd_coxeter(
    group: FpGroup, subgroup_words: Sequence[Sequence[int]], max_cosets: int | None = None
) -> CosetTable:
    """Enumerate the right cosets of ``<subgroup_words>`` in ``group``.

    Raises ``CosetLimitExceeded`` once more than ``max_cosets`` cosets are alive at once;
    that outcome says nothing about the index being infinite.
    """
    words = tuple(free_reduce(w) for w in subgroup_words)
    enumeration = _Enumeration(group, default_max_cosets() if max_cosets is None else max_cosets)
    enumeration.run(words)
    table = CosetTable(group, words, enumeration.standardized_action())
    logger.debug(
        "Coset enumeration: index %d, %d cosets defined, %d coincidences",
        table.size,
        len(enumeration.table),
        enumeration.coincidences,
    )
    problems = table.validate()
    if problems:
        raise ConsistencyError("Coset table failed validation: " + "; ".join(problems[:3]))
    return table
