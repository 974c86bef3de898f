"""Two-level cohomological Mackey data ``X_1 <-> X_G`` for a cyclic group of order ``n``.

A datum carries a ``C_n``-module ``X_1``, a group ``X_G``, restriction-like ``i: X_G -> X_1``
and corestriction-like ``t: X_1 -> X_G`` subject to::

    sigma i = i,   t sigma = t,   t i = n,   i t = norm
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from core.exceptions import ConsistencyError, DatumInvalid
from core.verdicts import Verdict, verdict_of
from cyccoh.modules import CyclicModule
from cyccoh.tate import herbrand, norm_endo
from exactalg.abelian import (
    AbHom,
    FgAbGroup,
    hom_cokernel,
    hom_image,
    hom_kernel,
    induced_hom,
    subgroup_equal,
    subgroup_quotient,
    subquotient_of,
)
from exactalg.matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SectionMackeyDatum:
    x1: CyclicModule
    xg: FgAbGroup
    i: AbHom
    t: AbHom

    @property
    def n(self) -> int:
        return self.x1.n

    def violated_axioms(self) -> list[str]:
        x1 = self.x1.group
        if self.i.domain != self.xg or self.i.codomain != x1:
            return ["i: X_G -> X_1"]
        if self.t.domain != x1 or self.t.codomain != self.xg:
            return ["t: X_1 -> X_G"]
        violated = []
        if self.x1.sigma @ self.i != self.i:
            violated.append("sigma i = i")
        if self.t @ self.x1.sigma != self.t:
            violated.append("t sigma = t")
        if self.t @ self.i != AbHom.scalar(self.xg, self.n):
            violated.append("t i = n")
        if self.i @ self.t != norm_endo(self.x1):
            violated.append("i t = norm")
        return violated


@dataclass(frozen=True)
class DatumValidation:
    violated: tuple[str, ...]

    @property
    def is_valid(self) -> bool:
        return not self.violated

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.is_valid)


def validate_datum(datum: SectionMackeyDatum) -> DatumValidation:
    return DatumValidation(tuple(datum.violated_axioms()))


def require_valid(datum: SectionMackeyDatum):
    violated = datum.violated_axioms()
    if violated:
        raise DatumInvalid(violated)


@dataclass(frozen=True)
class SectionCohomology:
    c0: FgAbGroup
    c1: FgAbGroup
    k0: FgAbGroup
    k1: FgAbGroup

    def orders(self) -> tuple[int, int, int, int]:
        return (self.c0.order, self.c1.order, self.k0.order, self.k1.order)


def section_cohomology(datum: SectionMackeyDatum) -> SectionCohomology:
    """The four section cohomology groups, each checked to be annihilated by ``n``.

    ``c0 = coker t``, ``c1 = ker t / (sigma-1)X_1``, ``k0 = ker i``, ``k1 = X_1^sigma / i X_G``.
    """
    require_valid(datum)
    x1 = datum.x1
    c0, _ = hom_cokernel(datum.t)
    _, ker_t = hom_kernel(datum.t)
    c1, _ = subgroup_quotient(ker_t, x1.sigma - x1.identity)
    k0, _ = hom_kernel(datum.i)
    _, invariants = x1.invariants()
    k1, _ = subgroup_quotient(invariants, datum.i)
    groups = SectionCohomology(c0, c1, k0, k1)
    for name in ("c0", "c1", "k0", "k1"):
        group = getattr(groups, name)
        if not group.is_finite or datum.n % group.exponent:
            raise ConsistencyError(f"{name} = {group} is not annihilated by {datum.n}")
    if datum.xg.is_torsion_free and not k0.is_trivial:
        raise ConsistencyError("k0 must vanish for a torsion-free X_G")
    return groups


@dataclass(frozen=True)
class ExactnessReport:
    groups: dict[str, FgAbGroup]
    exact_at: dict[str, bool]

    @property
    def exact(self) -> bool:
        return all(self.exact_at.values())

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.exact)


def _exact(incoming: AbHom, outgoing: AbHom) -> bool:
    return subgroup_equal(hom_image(incoming)[1], hom_kernel(outgoing)[1])


def six_term_check(datum: SectionMackeyDatum) -> ExactnessReport:
    """``0 -> c1 -> H^-1 -> k0 -> c0 -> H^0 -> k1 -> 0``, each map built on ambient lifts.

    Every group is a subquotient of the free cover of ``X_1`` or ``X_G`` (relations
    included), so each connecting map is induced by the identity, ``i`` or ``t`` matrix.
    """
    require_valid(datum)
    x1, xg = datum.x1, datum.xg
    m1, mg = x1.group.ngens, xg.ngens
    norm = norm_endo(x1)
    _, ker_t = hom_kernel(datum.t)
    _, ker_norm = hom_kernel(norm)
    _, ker_i = hom_kernel(datum.i)
    _, invariants = x1.invariants()
    augmentation = (x1.sigma - x1.identity).matrix
    zerog = IntMatrix.zeros(mg, 0)

    c1 = subquotient_of(x1.group, ker_t.matrix, augmentation)
    hm1 = subquotient_of(x1.group, ker_norm.matrix, augmentation)
    k0 = subquotient_of(xg, ker_i.matrix, zerog)
    c0 = subquotient_of(xg, IntMatrix.identity(mg), datum.t.matrix)
    h0 = subquotient_of(x1.group, invariants.matrix, norm.matrix)
    k1 = subquotient_of(x1.group, invariants.matrix, datum.i.matrix)
    maps = [
        induced_hom(c1, hm1, IntMatrix.identity(m1)),
        induced_hom(hm1, k0, datum.t.matrix),
        induced_hom(k0, c0, IntMatrix.identity(mg)),
        induced_hom(c0, h0, datum.i.matrix),
        induced_hom(h0, k1, IntMatrix.identity(m1)),
    ]
    report = ExactnessReport(
        groups={
            "c1": c1.group,
            "H^-1": hm1.group,
            "k0": k0.group,
            "c0": c0.group,
            "H^0": h0.group,
            "k1": k1.group,
        },
        exact_at={
            "c1": maps[0].is_injective(),
            "H^-1": _exact(maps[0], maps[1]),
            "k0": _exact(maps[1], maps[2]),
            "c0": _exact(maps[2], maps[3]),
            "H^0": _exact(maps[3], maps[4]),
            "k1": maps[4].is_surjective(),
        },
    )
    if not report.exact:
        logger.warning("Six-term sequence is not exact: %s", report.exact_at)
    return report


def euler_char(datum: SectionMackeyDatum) -> Fraction:
    """``|k0| |c1| / (|k1| |c0|)``, checked against ``1 / h(X_1)``."""
    groups = section_cohomology(datum)
    chi = Fraction(groups.k0.order * groups.c1.order, groups.k1.order * groups.c0.order)
    if chi * herbrand(datum.x1) != 1:
        raise ConsistencyError(f"Euler characteristic {chi} is not 1/h(X_1)")
    return chi
