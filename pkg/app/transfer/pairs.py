"""Groups with a distinguished finite-index subgroup, on either backend.

Maps between abelianizations are assembled from per-generator exponent vectors: the
image of every free generator of the group's word cover is computed, and the canonical
generators of the abelianization are pulled back through the cokernel lift.
"""
from __future__ import annotations

import abc
import itertools
import logging
import random
from functools import cached_property
from typing import Any, Sequence

from core.exceptions import NormalityError, PreconditionError
from exactalg.abelian import AbHom, Cokernel, FgAbGroup
from exactalg.matrix import IntMatrix
from fpgroups.abelianization import abelianization_fp
from fpgroups.coset_table import todd_coxeter
from fpgroups.presentation import FpGroup
from fpgroups.schreier import reidemeister_schreier, rewrite_in_subgroup
from fpgroups.words import Word, concat, inverse, power
from permgroups.groups import PermGroup, SubgroupHandle, abelianization
from permgroups.permutation import Permutation
from permgroups.subgroups import (
    LeftTransversal,
    generates_quotient,
    has_abelian_quotient,
    left_transversal,
    quotient_generator,
)

logger = logging.getLogger(__name__)


def hom_from_cover(
    source: Cokernel, codomain: FgAbGroup, images: Sequence[Sequence[int]]
) -> AbHom:
    """``source.group -> codomain`` from the images of the free cover's basis vectors."""
    cover = IntMatrix.from_columns([tuple(v) for v in images], codomain.ngens)
    return AbHom(source.group, codomain, cover @ source.lift)


class GroupPair(abc.ABC):
    """``G`` with a subgroup ``U`` of finite index and both abelianizations."""

    backend: str
    label: str

    @property
    @abc.abstractmethod
    def index(self) -> int: ...

    @property
    @abc.abstractmethod
    def ab_g(self) -> FgAbGroup: ...

    @property
    @abc.abstractmethod
    def ab_u(self) -> FgAbGroup: ...

    @abc.abstractmethod
    def transfer_map(self) -> AbHom: ...

    @abc.abstractmethod
    def random_transfer_map(self, rng: random.Random) -> AbHom:
        """The transfer recomputed from randomly chosen coset representatives."""

    @abc.abstractmethod
    def inclusion_map(self) -> AbHom: ...

    @abc.abstractmethod
    def conj_action(self, s: Any) -> AbHom: ...

    @abc.abstractmethod
    def is_normal(self) -> bool: ...

    @abc.abstractmethod
    def quotient_generator(self) -> Any:
        """An element whose coset generates ``G/U``; raises if the quotient is not cyclic."""

    @abc.abstractmethod
    def generates_quotient(self, s: Any) -> bool: ...

    @abc.abstractmethod
    def has_abelian_quotient(self) -> bool: ...

    @abc.abstractmethod
    def group_generators(self) -> Sequence[Any]: ...

    @abc.abstractmethod
    def power(self, s: Any, k: int) -> Any: ...

    @abc.abstractmethod
    def intermediate_abelianization(self, s: Any, d: int) -> FgAbGroup:
        """``H^ab`` for ``H = <U, s^d>``."""

    @property
    def is_finite(self) -> bool:
        return self.backend == "perm"

    def describe(self, element: Any) -> str:
        return str(element)

    def invariant_actions(self) -> list[AbHom]:
        """``c - 1`` for conjugation by each generator of ``G``."""
        if not self.is_normal():
            raise NormalityError(f"{self.label}: subgroup is not normal")
        identity = AbHom.identity(self.ab_u)
        return [self.conj_action(g) - identity for g in self.group_generators()]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label!r}, index={self.index})"


class PermPair(GroupPair):
    backend = "perm"

    def __init__(
        self,
        group: PermGroup,
        subgroup: SubgroupHandle,
        label: str = "",
        rng: random.Random | None = None,
    ):
        self.group = group
        self.subgroup = subgroup
        self.label = label or repr(group)
        self.transversal = left_transversal(group, subgroup, rng)
        self._ab_g = abelianization(group)
        self._ab_u = abelianization(subgroup.group)

    @property
    def index(self) -> int:
        return len(self.transversal)

    @property
    def ab_g(self) -> FgAbGroup:
        return self._ab_g.group

    @property
    def ab_u(self) -> FgAbGroup:
        return self._ab_u.group

    def project_u(self, element: Permutation) -> tuple[int, ...]:
        return self._ab_u.project(element)

    def project_g(self, element: Permutation) -> tuple[int, ...]:
        return self._ab_g.project(element)

    def transfer_of(
        self, g: Permutation, transversal: LeftTransversal | None = None
    ) -> tuple[int, ...]:
        """``sum_r [rep(g r)^-1 g r]`` over the left transversal."""
        if transversal is None:
            transversal = self.transversal
        total = self.ab_u.zero()
        for r in transversal:
            gr = g * r
            u = transversal.representative(gr).inverse() * gr
            total = self.ab_u.add(total, self.project_u(u))
        return total

    @cached_property
    def _transfer(self) -> AbHom:
        images = [self.transfer_of(g) for g in self.group.generators]
        return hom_from_cover(self._ab_g.cokernel, self.ab_u, images)

    def transfer_map(self) -> AbHom:
        return self._transfer

    def random_transfer_map(self, rng: random.Random) -> AbHom:
        transversal = left_transversal(self.group, self.subgroup, rng)
        images = [self.transfer_of(g, transversal) for g in self.group.generators]
        return hom_from_cover(self._ab_g.cokernel, self.ab_u, images)

    def inclusion_map(self) -> AbHom:
        images = [self.project_g(u) for u in self.subgroup.generators]
        return hom_from_cover(self._ab_u.cokernel, self.ab_g, images)

    def conj_action(self, s: Permutation) -> AbHom:
        images = []
        for u in self.subgroup.generators:
            c = s * u * s.inverse()
            if not self.subgroup.contains(c):
                raise NormalityError(f"{s} conjugates {u} out of the subgroup")
            images.append(self.project_u(c))
        return hom_from_cover(self._ab_u.cokernel, self.ab_u, images)

    def is_normal(self) -> bool:
        return self.subgroup.is_normal()

    def quotient_generator(self) -> Permutation:
        return quotient_generator(self.group, self.subgroup)

    def generates_quotient(self, s: Permutation) -> bool:
        return self.group.contains(s) and generates_quotient(s, self.subgroup)

    def has_abelian_quotient(self) -> bool:
        return has_abelian_quotient(self.group, self.subgroup)

    def group_generators(self) -> Sequence[Permutation]:
        return self.group.generators

    def power(self, s: Permutation, k: int) -> Permutation:
        return s**k

    def intermediate_abelianization(self, s: Permutation, d: int) -> FgAbGroup:
        generators = self.subgroup.generators + (s**d,)
        return abelianization(self.group.subgroup(generators).group).group

    @property
    def group_order(self) -> int:
        return self.group.order


class FpPair(GroupPair):
    """Right cosets from the coset table; ``U`` presented on its Schreier generators."""

    backend = "fp"

    def __init__(
        self,
        group: FpGroup,
        subgroup_words: Sequence[Sequence[int]],
        label: str = "",
        max_cosets: int | None = None,
    ):
        self.group = group
        self.label = label or str(group)
        self.max_cosets = max_cosets
        self.table = todd_coxeter(group, subgroup_words, max_cosets)
        self.presentation = reidemeister_schreier(self.table)
        self._ab_g = abelianization_fp(group)
        self._ab_u = abelianization_fp(self.presentation.group)

    @property
    def index(self) -> int:
        return self.table.size

    @property
    def ab_g(self) -> FgAbGroup:
        return self._ab_g.group

    @property
    def ab_u(self) -> FgAbGroup:
        return self._ab_u.group

    @property
    def tf_g(self) -> int:
        return self.ab_g.free_rank

    @property
    def tf_u(self) -> int:
        return self.ab_u.free_rank

    def project_u(self, word: Sequence[int]) -> tuple[int, ...]:
        """Abelianized image of a word of ``G`` lying in ``U``."""
        return self._ab_u.project(rewrite_in_subgroup(self.table, word))

    def transfer_of_generator(self, x: int) -> tuple[int, ...]:
        """``sum_c [r_c x r_{c.x}^-1]``; spanning-tree edges contribute nothing."""
        transversal = self.presentation.transversal
        total = self.ab_u.zero()
        for c in range(self.index):
            k = transversal.letter(c, x)
            if k is not None:
                total = self.ab_u.add(total, self._ab_u.project((k,)))
        return total

    @cached_property
    def _transfer(self) -> AbHom:
        images = [self.transfer_of_generator(x) for x in range(1, self.group.ngens + 1)]
        return hom_from_cover(self._ab_g.cokernel, self.ab_u, images)

    def transfer_map(self) -> AbHom:
        return self._transfer

    def transfer_through(self, x: int, representatives: Sequence[Word]) -> tuple[int, ...]:
        """``sum_c [r_c x r_{c.x}^-1]`` for any representatives, rewritten into ``U``."""
        total = self.ab_u.zero()
        for c, r in enumerate(representatives):
            target = representatives[self.table.act(c, x)]
            total = self.ab_u.add(total, self.project_u(concat(r, (x,), inverse(target))))
        return total

    def random_transfer_map(self, rng: random.Random) -> AbHom:
        """Representatives ``u_c r_c`` for random words ``u_c`` in the subgroup generators."""
        words = [w for w in self.table.subgroup_words if w]
        representatives = []
        for r in self.presentation.transversal.representatives:
            u: Word = ()
            for _ in range(rng.randint(1, 3) if words else 0):
                u = concat(u, power(rng.choice(words), rng.choice((1, -1))))
            representatives.append(concat(u, r))
        images = [
            self.transfer_through(x, representatives) for x in range(1, self.group.ngens + 1)
        ]
        return hom_from_cover(self._ab_g.cokernel, self.ab_u, images)

    def inclusion_map(self) -> AbHom:
        images = [self._ab_g.project(w) for w in self.presentation.schreier_words]
        return hom_from_cover(self._ab_u.cokernel, self.ab_g, images)

    def conj_action(self, s: Sequence[int]) -> AbHom:
        images = []
        s = tuple(s)
        for w in self.presentation.schreier_words:
            c = concat(s, w, inverse(s))
            if not self.table.contains(c):
                raise NormalityError(
                    f"{self.group.format(s)} conjugates {self.group.format(w)} "
                    "out of the subgroup"
                )
            images.append(self.project_u(c))
        return hom_from_cover(self._ab_u.cokernel, self.ab_u, images)

    def is_normal(self) -> bool:
        return all(
            self.table.trace(c, w) == c
            for w in self.table.subgroup_words
            for c in range(self.index)
        )

    def coset_permutation(self, word: Sequence[int]) -> Permutation:
        return Permutation(tuple(self.table.trace(c, word) for c in range(self.index)))

    def quotient_generator(self) -> Word:
        if not self.is_normal():
            raise PreconditionError(f"{self.label}: subgroup is not normal")
        for word in self.presentation.transversal.representatives:
            if self.coset_permutation(word).order() == self.index:
                return word
        raise PreconditionError(f"{self.label}: G/U of order {self.index} is not cyclic")

    def generates_quotient(self, s: Sequence[int]) -> bool:
        return self.coset_permutation(s).order() == self.index

    def has_abelian_quotient(self) -> bool:
        actions = [self.coset_permutation(w) for w in self.group_generators()]
        return self.is_normal() and all(
            a * b == b * a for a, b in itertools.combinations(actions, 2)
        )

    def group_generators(self) -> Sequence[Word]:
        return [(x,) for x in range(1, self.group.ngens + 1)]

    def power(self, s: Sequence[int], k: int) -> Word:
        return power(s, k)

    def intermediate_abelianization(self, s: Sequence[int], d: int) -> FgAbGroup:
        words = [w for w in (*self.table.subgroup_words, power(s, d)) if w]
        table = todd_coxeter(self.group, words, self.max_cosets)
        return abelianization_fp(reidemeister_schreier(table).group).group

    def describe(self, element: Sequence[int]) -> str:
        return self.group.format(element)
