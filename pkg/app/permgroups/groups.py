"""Finite permutation groups enumerated by breadth-first search with defining words.

A word is a tuple of signed 1-based generator indices: ``2`` is the second
generator and ``-2`` its inverse. Words evaluate left to right as group
products, so ``(1, 2)`` is ``g1 * g2``.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from core.exceptions import GroupOrderOverflow, MembershipError
from core.limits import algebra_setting
from exactalg.abelian import Cokernel, FgAbGroup, cokernel_structure
from exactalg.matrix import IntMatrix
from permgroups.permutation import Permutation

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


def default_order_cap() -> int:
    return algebra_setting("MAX_ORDER")


class PermGroup:
    """A group generated by permutations of one degree.

    The element table is built lazily on first use and cached.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        self.generators = tuple(generators)
        if degree is None:
            if not self.generators:
                raise ValueError("Degree is required for a group without generators.")
            degree = self.generators[0].degree
        if any(g.degree != degree for g in self.generators):
            raise ValueError(f"All generators must have degree {degree}.")
        self.degree = degree
        self._table: dict[Permutation, Word] | None = None
        self._elements: list[Permutation] | None = None

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def enumerate(self, cap: int | None = None) -> dict[Permutation, Word]:
        if self._table is not None:
            return self._table
        cap = default_order_cap() if cap is None else cap
        steps = [(i + 1, g) for i, g in enumerate(self.generators)]
        steps += [(-(i + 1), g.inverse()) for i, g in enumerate(self.generators)]
        table: dict[Permutation, Word] = {self.identity: ()}
        order = [self.identity]
        queue = deque(order)
        while queue:
            x = queue.popleft()
            for letter, g in steps:
                y = x * g
                if y in table:
                    continue
                if len(table) >= cap:
                    raise GroupOrderOverflow(cap)
                table[y] = table[x] + (letter,)
                order.append(y)
                queue.append(y)
        logger.debug("Enumerated %d elements of %r", len(table), self)
        self._table, self._elements = table, order
        return table

    def elements(self) -> list[Permutation]:
        """Elements in breadth-first order, identity first."""
        self.enumerate()
        return self._elements

    @property
    def order(self) -> int:
        return len(self.enumerate())

    def contains(self, element: Permutation) -> bool:
        return element in self.enumerate()

    def word_of(self, element: Permutation) -> Word:
        try:
            return self.enumerate()[element]
        except KeyError:
            raise MembershipError(f"{element} is not an element of {self!r}") from None

    def evaluate(self, word: Sequence[int]) -> Permutation:
        result = self.identity
        for letter in word:
            g = self.generators[abs(letter) - 1]
            result = result * (g if letter > 0 else g.inverse())
        return result

    def exponent_vector(self, element: Permutation) -> tuple[int, ...]:
        """Exponent sums of the stored word; a lift of the element to Z^ngens."""
        vector = [0] * self.ngens
        for letter in self.word_of(element):
            vector[abs(letter) - 1] += 1 if letter > 0 else -1
        return tuple(vector)

    def is_abelian(self) -> bool:
        return all(g * h == h * g for g in self.generators for h in self.generators)

    def subgroup(self, generators: Iterable[Permutation]) -> SubgroupHandle:
        return SubgroupHandle(self, generators)

    def whole(self) -> SubgroupHandle:
        return SubgroupHandle(self, self.generators)

    def trivial_subgroup(self) -> SubgroupHandle:
        return SubgroupHandle(self, ())


class SubgroupHandle:
    """A subgroup of ``parent`` given by generators that lie in the parent."""

    def __init__(self, parent: PermGroup, generators: Iterable[Permutation]):
        self.parent = parent
        self.generators = tuple(generators)
        for g in self.generators:
            if not parent.contains(g):
                raise MembershipError(f"Subgroup generator {g} is not in {parent!r}")
        self.group = PermGroup(self.generators, parent.degree)
        self._elements: frozenset[Permutation] | None = None

    def __repr__(self) -> str:
        gens = [str(g) for g in self.generators]
        return f"SubgroupHandle(order={self.order}, generators={gens})"

    def elements(self) -> frozenset[Permutation]:
        if self._elements is None:
            self._elements = frozenset(self.group.enumerate())
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements())

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def contains(self, element: Permutation) -> bool:
        return element in self.elements()

    def __le__(self, other: SubgroupHandle) -> bool:
        return self.elements() <= other.elements()

    def same_as(self, other: SubgroupHandle) -> bool:
        return self.elements() == other.elements()

    def is_normal(self) -> bool:
        return all(
            self.contains(g * h * g.inverse())
            for g in self.parent.generators
            for h in self.generators
        )


def enumerate_elements(group: PermGroup, cap: int | None = None) -> dict[Permutation, Word]:
    return group.enumerate(cap)


@dataclass(frozen=True)
class PermAbelianization:
    """``G^ab`` with the projection of elements through their stored words."""

    source: PermGroup
    cokernel: Cokernel

    @property
    def group(self) -> FgAbGroup:
        return self.cokernel.group

    def project(self, element: Permutation) -> tuple[int, ...]:
        return self.cokernel.image(self.source.exponent_vector(element))

    def generator_image(self, i: int) -> tuple[int, ...]:
        return self.cokernel.image(IntMatrix.identity(self.source.ngens).column(i))


def abelianization(group: PermGroup) -> PermAbelianization:
    """Cokernel of the Cayley-graph relations ``v_x + e_j - v_{x g_j}``."""
    vectors = {x: group.exponent_vector(x) for x in group.enumerate()}
    relations = set()
    for x, v in vectors.items():
        for j, g in enumerate(group.generators):
            w = vectors[x * g]
            column = tuple(v[i] + (i == j) - w[i] for i in range(group.ngens))
            if any(column):
                relations.add(column)
    matrix = IntMatrix.from_columns(sorted(relations), group.ngens)
    logger.debug(
        "Abelianizing with %d distinct relations on %d generators", len(relations), group.ngens
    )
    return PermAbelianization(group, cokernel_structure(matrix))
