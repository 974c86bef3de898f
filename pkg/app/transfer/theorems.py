"""Executable forms of the transfer theorems, one report per pair.

Verifiers never raise for a failed identity: they return a report whose verdict is
``fail``. Broken preconditions that make the question meaningless (a non-cyclic
quotient, an index that is not prime) raise ``PreconditionError``; hypotheses that
simply do not hold give ``hypothesis-not-met``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from sympy import divisors, isprime

from core.exceptions import ConsistencyError, PreconditionError
from core.verdicts import Verdict, verdict_of
from cyccoh.lattices import LatticeDecomposition, diederichsen_multiplicities
from cyccoh.modules import CyclicModule
from cyccoh.tate import exact_log, herbrand, tate_hm1
from exactalg.abelian import AbHom, FgAbGroup, hom_image, hom_kernel, subgroup_equal
from mackey.ab import ab_datum
from mackey.datum import section_cohomology
from transfer.kernels import composition_holds, transfer_cokernel, transfer_kernel
from transfer.pairs import GroupPair

logger = logging.getLogger(__name__)


def _log_verdict(name: str, pair: GroupPair, verdict: Verdict):
    if verdict == Verdict.FAIL:
        logger.warning("%s fails on %s", name, pair.label)
    else:
        logger.info("%s on %s: %s", name, pair.label, verdict)


@dataclass(frozen=True)
class TransferReport:
    tk_order: int
    tc_order: int
    index: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.tk_order, self.tc_order)

    @property
    def hs_multiplier(self) -> Fraction:
        return Fraction(self.tk_order, self.index)


def transfer_report(pair: GroupPair) -> TransferReport:
    if not composition_holds(pair):
        raise ConsistencyError(f"{pair.label}: inclusion o transfer is not |G:U|")
    return TransferReport(
        tk_order=transfer_kernel(pair).order,
        tc_order=transfer_cokernel(pair).order,
        index=pair.index,
    )


def _generator(pair: GroupPair, s: Any) -> Any:
    if s is None:
        return pair.quotient_generator()
    if not pair.generates_quotient(s):
        raise PreconditionError(f"{pair.describe(s)} does not generate G/N")
    return s


@dataclass(frozen=True)
class KernelReport:
    generator: str
    kernel: FgAbGroup
    augmentation_image: FgAbGroup
    equal: bool
    c1_order: int

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.equal and self.c1_order == 1)


def verify_thm_A(pair: GroupPair, s: Any = None) -> KernelReport:
    """``ker(N^ab -> G^ab) = (s - 1) N^ab`` and, equivalently, ``c1(Ab) = 0``."""
    s = _generator(pair, s)
    sigma = pair.conj_action(s)
    kernel, kernel_incl = hom_kernel(pair.inclusion_map())
    image, image_incl = hom_image(sigma - AbHom.identity(pair.ab_u))
    report = KernelReport(
        generator=pair.describe(s),
        kernel=kernel,
        augmentation_image=image,
        equal=subgroup_equal(kernel_incl, image_incl),
        c1_order=section_cohomology(ab_datum(pair, s)).c1.order,
    )
    _log_verdict("Kernel of the inclusion", pair, report.verdict)
    return report


@dataclass(frozen=True)
class OrderReport:
    tk_order: int
    tc_order: int
    index: int
    euler_is_one: bool
    suzuki_divides: bool
    finite: bool = True

    @property
    def holds(self) -> bool:
        return self.tk_order == self.index * self.tc_order

    @property
    def verdict(self) -> Verdict:
        if not self.finite:
            return Verdict.HYPOTHESIS_NOT_MET
        return verdict_of(self.holds and self.euler_is_one and self.suzuki_divides)


def verify_thm_C(pair: GroupPair) -> OrderReport:
    """``|tk| = |G:N| |tc|`` for finite ``G``, cross-checked against ``chi(Ab) = 1``."""
    pair.quotient_generator()  # raises on a non-cyclic quotient
    transfer = transfer_report(pair)
    groups = section_cohomology(ab_datum(pair))
    euler = Fraction(groups.k0.order * groups.c1.order, groups.k1.order * groups.c0.order)
    report = OrderReport(
        tk_order=transfer.tk_order,
        tc_order=transfer.tc_order,
        index=pair.index,
        euler_is_one=euler == 1,
        suzuki_divides=transfer.tk_order % pair.index == 0,
        finite=pair.is_finite,
    )
    _log_verdict("Transfer order identity", pair, report.verdict)
    return report


@dataclass(frozen=True)
class DivisibilityReport:
    tk_order: int
    index: int
    cyclic_quotient: bool

    @property
    def divides(self) -> bool:
        return self.tk_order % self.index == 0

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.divides)


def verify_suzuki(pair: GroupPair) -> DivisibilityReport:
    """``|G:U|`` divides ``|tk|`` for finite ``G`` and any ``U`` with ``G/U`` abelian."""
    if not pair.is_finite:
        raise PreconditionError(f"{pair.label}: G is infinite")
    if not pair.has_abelian_quotient():
        raise PreconditionError(f"{pair.label}: G/U is not abelian")
    if not composition_holds(pair):
        raise ConsistencyError(f"{pair.label}: inclusion o transfer is not |G:U|")
    try:
        pair.quotient_generator()
        cyclic = True
    except PreconditionError:
        cyclic = False
    report = DivisibilityReport(transfer_kernel(pair).order, pair.index, cyclic)
    _log_verdict("Index divides the transfer kernel", pair, report.verdict)
    return report


@dataclass(frozen=True)
class RankReport:
    p: int
    tf_g: int
    tf_u: int
    ratio: Fraction | None = None
    log_ratio: int | None = None
    herbrand: Fraction | None = None
    normal: bool = True

    @property
    def formula_holds(self) -> bool:
        if self.log_ratio is None:
            return False
        return self.tf_u == self.p * self.tf_g + (1 - self.p) * (1 - self.log_ratio)

    @property
    def herbrand_holds(self) -> bool:
        return self.ratio is not None and self.herbrand == self.p / self.ratio

    @property
    def verdict(self) -> Verdict:
        if not self.normal:
            return Verdict.HYPOTHESIS_NOT_MET
        return verdict_of(self.formula_holds and self.herbrand_holds)


def verify_thm_D(pair: GroupPair) -> RankReport:
    """``tf(U) = p tf(G) + (1 - p)(1 - log_p rho)`` and ``h(U^ab) = p / rho``."""
    p = pair.index
    if not isprime(p):
        raise PreconditionError(f"{pair.label}: index {p} is not prime")
    tf_g, tf_u = pair.ab_g.free_rank, pair.ab_u.free_rank
    if not pair.is_normal():
        report = RankReport(p, tf_g, tf_u, normal=False)
    else:
        transfer = transfer_report(pair)
        report = RankReport(
            p,
            tf_g,
            tf_u,
            ratio=transfer.ratio,
            log_ratio=exact_log(transfer.ratio, p),
            herbrand=herbrand(ab_datum(pair).x1),
        )
    _log_verdict("Free rank formula", pair, report.verdict)
    return report


@dataclass(frozen=True)
class PermutationModuleReport:
    abelianizations: tuple[FgAbGroup, ...]
    section_hm1: tuple[FgAbGroup, ...] = ()
    decomposition: LatticeDecomposition | None = None

    @property
    def hypothesis_holds(self) -> bool:
        return all(group.is_torsion_free for group in self.abelianizations)

    @property
    def verdict(self) -> Verdict:
        if not self.hypothesis_holds:
            return Verdict.HYPOTHESIS_NOT_MET
        vanishes = all(group.is_trivial for group in self.section_hm1)
        return verdict_of(
            vanishes and (self.decomposition is None or self.decomposition.s == 0)
        )


def verify_thm_B(pair: GroupPair) -> PermutationModuleReport:
    """Torsion-free ``H^ab`` for all ``N <= H <= G`` forces ``H^-1(H/N, N^ab) = 0``.

    For prime index the module ``N^ab`` is then a permutation module: no augmentation
    ideal summands in its lattice decomposition.
    """
    s = pair.quotient_generator()
    n = pair.index
    abelianizations = tuple(pair.intermediate_abelianization(s, d) for d in divisors(n))
    report = PermutationModuleReport(abelianizations)
    if report.hypothesis_holds:
        section_hm1 = []
        for d in divisors(n):
            module = CyclicModule(pair.ab_u, pair.conj_action(pair.power(s, d)), n // d)
            section_hm1.append(tate_hm1(module))
        decomposition = None
        if isprime(n):
            decomposition = diederichsen_multiplicities(ab_datum(pair, s).x1, n)
        report = PermutationModuleReport(abelianizations, tuple(section_hm1), decomposition)
    _log_verdict("Permutation module criterion", pair, report.verdict)
    return report


@dataclass(frozen=True)
class SectionRank:
    label: str
    p: int
    ratio: Fraction
    value: int | None
    tk_tc_trivial: bool


@dataclass(frozen=True)
class GtfReport:
    sections: tuple[SectionRank, ...] = field(default_factory=tuple)

    @property
    def agree(self) -> bool:
        return len({section.value for section in self.sections}) <= 1

    @property
    def verdict(self) -> Verdict:
        return verdict_of(all(section.value is not None for section in self.sections))


def gtf_report(sections: Sequence[GroupPair]) -> GtfReport:
    """``1 - log_p rho`` per prime-index section; agreement is only reported."""
    rows = []
    for pair in sections:
        if not isprime(pair.index):
            raise PreconditionError(f"{pair.label}: index {pair.index} is not prime")
        transfer = transfer_report(pair)
        log_ratio = exact_log(transfer.ratio, pair.index)
        rows.append(
            SectionRank(
                label=pair.label,
                p=pair.index,
                ratio=transfer.ratio,
                value=None if log_ratio is None else 1 - log_ratio,
                tk_tc_trivial=transfer.tk_order == transfer.tc_order == 1,
            )
        )
    report = GtfReport(tuple(rows))
    if not report.agree:
        logger.info("Sections disagree on 1 - log_p rho: %s", [r.value for r in rows])
    return report
