"""The abelianization datum of a co-cyclic pair and the identities it satisfies."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from core.exceptions import ConsistencyError, PreconditionError
from core.verdicts import Verdict, verdict_of
from cyccoh.modules import CyclicModule
from mackey.datum import SectionMackeyDatum, euler_char, section_cohomology
from transfer.kernels import transfer_ratio
from transfer.pairs import GroupPair

logger = logging.getLogger(__name__)


def ab_datum(pair: GroupPair, s: Any = None) -> SectionMackeyDatum:
    """``U^ab`` with conjugation by ``s`` over ``G^ab``, transfer as ``i``, inclusion as ``t``.

    ``s`` defaults to the pair's own coset generator.
    """
    if s is None:
        s = pair.quotient_generator()
    elif not pair.generates_quotient(s):
        raise PreconditionError(f"{pair.describe(s)} does not generate G/U")
    x1 = CyclicModule(pair.ab_u, pair.conj_action(s), pair.index)
    datum = SectionMackeyDatum(x1, pair.ab_g, pair.transfer_map(), pair.inclusion_map())
    violated = datum.violated_axioms()
    if violated:
        raise ConsistencyError(f"{pair.label}: abelianization datum violates {violated}")
    return datum


@dataclass(frozen=True)
class Hilbert90Report:
    c0_order: int
    c0_cyclic: bool
    c1_order: int
    index: int

    @property
    def holds(self) -> bool:
        return self.c1_order == 1 and self.c0_cyclic and self.c0_order == self.index

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.holds)


def verify_prop_h90(pair: GroupPair) -> Hilbert90Report:
    """``c1 = 0`` and ``c0 = G/N`` for the abelianization datum."""
    groups = section_cohomology(ab_datum(pair))
    report = Hilbert90Report(
        c0_order=groups.c0.order,
        c0_cyclic=groups.c0.is_cyclic,
        c1_order=groups.c1.order,
        index=pair.index,
    )
    if not report.holds:
        logger.warning("%s: section cohomology check failed: %s", pair.label, report)
    return report


@dataclass(frozen=True)
class EulerReport:
    euler: Fraction
    ratio: Fraction
    index: int
    finite: bool

    @property
    def holds(self) -> bool:
        if self.euler * self.index != self.ratio:
            return False
        return not self.finite or self.euler == 1

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.holds)


def verify_eucc(pair: GroupPair) -> EulerReport:
    """``chi(Ab) = rho / |G:N|``; for finite ``G`` also ``chi(Ab) = 1``."""
    report = EulerReport(
        euler=euler_char(ab_datum(pair)),
        ratio=transfer_ratio(pair),
        index=pair.index,
        finite=pair.is_finite,
    )
    logger.info("%s: Euler characteristic %s, %s", pair.label, report.euler, report.verdict)
    return report
