"""Transfer kernel, transfer cokernel and the numbers built from their orders."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from core.exceptions import ConsistencyError, NormalityError
from core.verdicts import Verdict, verdict_of
from exactalg.abelian import (
    AbHom,
    FgAbGroup,
    hom_kernel,
    joint_kernel,
    subgroup_contains,
    subgroup_quotient,
)
from transfer.pairs import GroupPair

logger = logging.getLogger(__name__)


def invariant_subgroup(pair: GroupPair) -> AbHom:
    """Inclusion of ``(U^ab)^G``; raises ``NormalityError`` when ``U`` is not normal."""
    actions = pair.invariant_actions()
    if not actions:
        return AbHom.identity(pair.ab_u)
    return joint_kernel(actions)[1]


def composition_holds(pair: GroupPair) -> bool:
    """``inclusion o transfer = |G:U|`` on ``G^ab``."""
    return pair.inclusion_map() @ pair.transfer_map() == AbHom.scalar(pair.ab_g, pair.index)


@dataclass(frozen=True)
class ConsistencyReport:
    composition_holds: bool
    transversals_tried: int
    transversal_independent: bool

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.composition_holds and self.transversal_independent)


def transfer_consistency(
    pair: GroupPair, rng: random.Random, transversals: int = 2
) -> ConsistencyReport:
    """The composition law, and an unchanged transfer under random transversals."""
    fixed = pair.transfer_map()
    independent = all(pair.random_transfer_map(rng) == fixed for _ in range(transversals))
    if not independent:
        logger.warning("%s: the transfer depends on the transversal", pair.label)
    return ConsistencyReport(composition_holds(pair), transversals, independent)


def transfer_kernel(pair: GroupPair) -> FgAbGroup:
    if not pair.is_normal():
        raise NormalityError(f"{pair.label}: subgroup is not normal")
    tk, _ = hom_kernel(pair.transfer_map())
    if not tk.is_finite:
        raise ConsistencyError(f"{pair.label}: transfer kernel {tk} is infinite")
    return tk


def transfer_cokernel(pair: GroupPair) -> FgAbGroup:
    """``(U^ab)^G / im(transfer)``."""
    invariants = invariant_subgroup(pair)
    transfer = pair.transfer_map()
    if not subgroup_contains(invariants, transfer):
        raise ConsistencyError(f"{pair.label}: transfer image leaves the invariants")
    tc, _ = subgroup_quotient(invariants, transfer)
    if not tc.is_finite or pair.index % tc.exponent:
        raise ConsistencyError(f"{pair.label}: {tc} is not annihilated by {pair.index}")
    logger.debug("%s: transfer cokernel %s", pair.label, tc)
    return tc


def transfer_ratio(pair: GroupPair) -> Fraction:
    return Fraction(transfer_kernel(pair).order, transfer_cokernel(pair).order)


def hs_multiplier(pair: GroupPair) -> Fraction:
    return Fraction(transfer_kernel(pair).order, pair.index)
