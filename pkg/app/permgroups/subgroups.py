from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass

from sympy import divisors

from core.exceptions import PreconditionError
from core.verdicts import Verdict, verdict_of
from permgroups.commutators import commutator, conjugate
from permgroups.groups import PermGroup, SubgroupHandle
from permgroups.permutation import Permutation

logger = logging.getLogger(__name__)


def normal_closure(group: PermGroup, generators: list[Permutation]) -> SubgroupHandle:
    subgroup = group.subgroup(generators)
    pending = list(subgroup.generators)
    while pending:
        h = pending.pop()
        for g in group.generators:
            c = conjugate(g, h)
            if not subgroup.contains(c):
                subgroup = group.subgroup(subgroup.generators + (c,))
                pending.append(c)
    return subgroup


def commutator_subgroup(group: PermGroup) -> SubgroupHandle:
    """``[G,G]``: normal closure of the commutators of generators."""
    gens = [
        c
        for x, y in itertools.combinations(group.generators, 2)
        if not (c := commutator(x, y)).is_identity()
    ]
    derived = normal_closure(group, gens)
    assert derived.is_normal()
    return derived


def derived_subgroup_of(subgroup: SubgroupHandle) -> SubgroupHandle:
    """``[N,N]`` as a subgroup of the parent of ``N``."""
    inner = commutator_subgroup(subgroup.group)
    return subgroup.parent.subgroup(inner.generators)


@dataclass(frozen=True)
class LeftTransversal:
    """One representative per left coset ``rU``; the coset of ``U`` itself comes first."""

    representatives: tuple[Permutation, ...]
    coset_of: dict[Permutation, int]

    def __len__(self) -> int:
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    def representative(self, element: Permutation) -> Permutation:
        return self.representatives[self.coset_of[element]]


def left_transversal(
    group: PermGroup, subgroup: SubgroupHandle, rng: random.Random | None = None
) -> LeftTransversal:
    """Cosets are listed in breadth-first order of their first element.

    With ``rng`` each coset's representative is drawn at random, which exercises
    the independence of the transfer from the choice of representatives.
    """
    members = subgroup.elements()
    coset_of: dict[Permutation, int] = {}
    cosets: list[list[Permutation]] = []
    for x in group.elements():
        if x in coset_of:
            continue
        coset = [x] + [x * u for u in members if not u.is_identity()]
        for y in coset:
            coset_of[y] = len(cosets)
        cosets.append(coset)
    if rng is None:
        representatives = tuple(c[0] for c in cosets)
    else:
        representatives = tuple(rng.choice(sorted(c)) for c in cosets)
    assert group.order == subgroup.order * len(representatives)
    return LeftTransversal(representatives, coset_of)


def coset_order(element: Permutation, subgroup: SubgroupHandle, bound: int) -> int:
    """Smallest ``k >= 1`` with ``element^k`` in ``subgroup``."""
    power = element
    for k in range(1, bound + 1):
        if subgroup.contains(power):
            return k
        power = power * element
    raise PreconditionError(f"{element} has coset order above {bound}")


def quotient_generator(group: PermGroup, normal: SubgroupHandle) -> Permutation:
    """An element whose coset generates ``G/N``; raises if the quotient is not cyclic."""
    if not normal.is_normal():
        raise PreconditionError("Subgroup is not normal, the quotient is undefined.")
    n = normal.index
    for g in itertools.chain(group.generators, group.elements()):
        if coset_order(g, normal, n) == n:
            return g
    raise PreconditionError(f"G/N of order {n} is not cyclic.")


def generates_quotient(s: Permutation, normal: SubgroupHandle) -> bool:
    return coset_order(s, normal, normal.parent.order) == normal.index


def has_abelian_quotient(group: PermGroup, normal: SubgroupHandle) -> bool:
    """``N`` is normal and holds the commutators of the generators of ``G``."""
    return normal.is_normal() and all(
        normal.contains(commutator(x, y)) for x, y in itertools.combinations(group.generators, 2)
    )


def intermediate_subgroups(group: PermGroup, normal: SubgroupHandle) -> list[SubgroupHandle]:
    """All ``N <= H <= G`` for cyclic ``G/N``, ordered by increasing order."""
    s = quotient_generator(group, normal)
    n = normal.index
    result = [group.subgroup(normal.generators + (s**d,)) for d in reversed(divisors(n))]
    logger.debug("Found %d intermediate subgroups over an index-%d section", len(result), n)
    return result


@dataclass(frozen=True)
class CyclicSectionReport:
    derived_order: int
    product_set_order: int
    section_commutators: int
    derived_n_order: int
    generated_order: int
    product_set_equal: bool
    generated_equal: bool

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.product_set_equal and self.generated_equal)


def verify_lemma21(
    group: PermGroup, normal: SubgroupHandle, s: Permutation
) -> CyclicSectionReport:
    """``[G,G] = [s,N][N,N]`` as sets and ``[G,G] = [<s>,N][N,N]`` as subgroups."""
    if not normal.is_normal():
        raise PreconditionError("N is not normal in G.")
    if not group.contains(s) or not generates_quotient(s, normal):
        raise PreconditionError(f"G is not generated by {s} and N.")
    derived = commutator_subgroup(group).elements()
    derived_n = derived_subgroup_of(normal).elements()
    section = {commutator(s, v) for v in normal.elements()}
    product_set = {c * w for c in section for w in derived_n}
    powers = [s**k for k in range(s.order())]
    section_gens = {commutator(t, v) for t in powers for v in normal.elements()}
    generated = group.subgroup(
        sorted(x for x in section_gens | derived_n if not x.is_identity())
    ).elements()
    report = CyclicSectionReport(
        derived_order=len(derived),
        product_set_order=len(product_set),
        section_commutators=len(section),
        derived_n_order=len(derived_n),
        generated_order=len(generated),
        product_set_equal=product_set == derived,
        generated_equal=generated == derived,
    )
    logger.info("Cyclic section commutator check: %s", report.verdict)
    return report
