"""Building new data from old: trivial data, direct sums, multiplication sub-data and
quotients, plus short exact sequences of data and the multiplicativity of ``chi``."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from core.exceptions import PreconditionError
from core.verdicts import Verdict, verdict_of
from cyccoh.modules import CyclicModule, direct_sum_modules, trivial_lattice
from exactalg.abelian import (
    AbHom,
    FgAbGroup,
    Subquotient,
    direct_sum,
    hom_image,
    hom_kernel,
    induced_hom,
    subgroup_equal,
    subquotient_of,
)
from exactalg.matrix import IntMatrix
from mackey.datum import SectionMackeyDatum, euler_char

logger = logging.getLogger(__name__)


def trivial_datum(n: int, rank: int = 1) -> SectionMackeyDatum:
    """``Z^rank`` at both levels with trivial action, ``i = 1`` and ``t = n``."""
    x1 = trivial_lattice(rank, n)
    return SectionMackeyDatum(x1, x1.group, x1.identity, AbHom.scalar(x1.group, n))


@dataclass(frozen=True)
class MackeyMorphism:
    """Maps at the bottom (``f1``) and top (``fg``) level."""

    f1: AbHom
    fg: AbHom

    def problems(self, source: SectionMackeyDatum, target: SectionMackeyDatum) -> list[str]:
        if (self.f1.domain, self.f1.codomain) != (source.x1.group, target.x1.group):
            return ["bottom map has the wrong ends"]
        if (self.fg.domain, self.fg.codomain) != (source.xg, target.xg):
            return ["top map has the wrong ends"]
        problems = []
        if self.f1 @ source.x1.sigma != target.x1.sigma @ self.f1:
            problems.append("bottom map is not equivariant")
        if self.f1 @ source.i != target.i @ self.fg:
            problems.append("maps do not commute with i")
        if self.fg @ source.t != target.t @ self.f1:
            problems.append("maps do not commute with t")
        return problems


def _exact(f: AbHom, g: AbHom) -> bool:
    return (
        f.is_injective()
        and g.is_surjective()
        and subgroup_equal(hom_image(f)[1], hom_kernel(g)[1])
    )


@dataclass(frozen=True)
class DatumSequence:
    """``0 -> A -> B -> C -> 0``."""

    a: SectionMackeyDatum
    b: SectionMackeyDatum
    c: SectionMackeyDatum
    f: MackeyMorphism
    g: MackeyMorphism

    def problems(self) -> list[str]:
        problems = [f"f: {p}" for p in self.f.problems(self.a, self.b)]
        problems += [f"g: {p}" for p in self.g.problems(self.b, self.c)]
        if problems:
            return problems
        if not _exact(self.f.f1, self.g.f1):
            problems.append("bottom level is not short exact")
        if not _exact(self.f.fg, self.g.fg):
            problems.append("top level is not short exact")
        return problems


def direct_sum_data(data: Sequence[SectionMackeyDatum]) -> SectionMackeyDatum:
    x1 = direct_sum_modules([d.x1 for d in data])
    bottom = direct_sum([d.x1.group for d in data])
    top = direct_sum([d.xg for d in data])
    i = AbHom.zero(top.group, bottom.group)
    t = AbHom.zero(bottom.group, top.group)
    for d, inj1, proj1, injg, projg in zip(
        data, bottom.injections, bottom.projections, top.injections, top.projections
    ):
        i = i + inj1 @ d.i @ projg
        t = t + injg @ d.t @ proj1
    return SectionMackeyDatum(x1, top.group, i, t)


def direct_sum_sequence(a: SectionMackeyDatum, c: SectionMackeyDatum) -> DatumSequence:
    """``0 -> A -> A + C -> C -> 0``."""
    b = direct_sum_data([a, c])
    bottom = direct_sum([a.x1.group, c.x1.group])
    top = direct_sum([a.xg, c.xg])
    return DatumSequence(
        a,
        b,
        c,
        MackeyMorphism(bottom.injections[0], top.injections[0]),
        MackeyMorphism(bottom.projections[1], top.projections[1]),
    )


def _projection(group: FgAbGroup, sq: Subquotient) -> AbHom:
    return AbHom.from_images(
        group, sq.group, [sq.element(group.basis_vector(j)) for j in range(group.ngens)]
    )


def quotient_datum(
    datum: SectionMackeyDatum, f: MackeyMorphism
) -> tuple[SectionMackeyDatum, MackeyMorphism]:
    """``B / f(A)`` with the projection ``B -> B / f(A)``."""
    x1, xg = datum.x1.group, datum.xg
    bottom = subquotient_of(x1, IntMatrix.identity(x1.ngens), f.f1.matrix)
    top = subquotient_of(xg, IntMatrix.identity(xg.ngens), f.fg.matrix)
    sigma = induced_hom(bottom, bottom, datum.x1.sigma.matrix)
    quotient = SectionMackeyDatum(
        CyclicModule(bottom.group, sigma, datum.n),
        top.group,
        induced_hom(top, bottom, datum.i.matrix),
        induced_hom(bottom, top, datum.t.matrix),
    )
    return quotient, MackeyMorphism(_projection(x1, bottom), _projection(xg, top))


def multiplication_sequence(datum: SectionMackeyDatum, m: int) -> DatumSequence:
    """``0 -> X --m--> X -> X / mX -> 0``; ``X`` must be torsion-free at both levels."""
    if not (datum.x1.group.is_torsion_free and datum.xg.is_torsion_free):
        raise PreconditionError("Multiplication by m is only injective on lattices.")
    f = MackeyMorphism(AbHom.scalar(datum.x1.group, m), AbHom.scalar(datum.xg, m))
    quotient, g = quotient_datum(datum, f)
    return DatumSequence(datum, datum, quotient, f, g)


@dataclass(frozen=True)
class EulerMultReport:
    chi_a: Fraction
    chi_b: Fraction
    chi_c: Fraction

    @property
    def holds(self) -> bool:
        return self.chi_b == self.chi_a * self.chi_c

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.holds)


def verify_euler_mult(sequence: DatumSequence) -> EulerMultReport:
    problems = sequence.problems()
    if problems:
        raise PreconditionError("Not a short exact sequence of data: " + "; ".join(problems))
    report = EulerMultReport(
        euler_char(sequence.a), euler_char(sequence.b), euler_char(sequence.c)
    )
    logger.info("Euler characteristic multiplicativity: %s", report.verdict)
    return report
