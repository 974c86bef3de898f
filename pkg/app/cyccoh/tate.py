"""Tate cohomology of cyclic groups in degrees 0 and -1, and Herbrand quotients."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from core.exceptions import ConsistencyError, PreconditionError, TheoremViolation
from core.verdicts import Verdict, verdict_of
from cyccoh.modules import CyclicModule
from exactalg.abelian import (
    AbHom,
    FgAbGroup,
    hom_image,
    hom_kernel,
    subgroup_equal,
    subgroup_quotient,
)

logger = logging.getLogger(__name__)


def norm_endo(module: CyclicModule) -> AbHom:
    """``1 + sigma + ... + sigma^(n-1)``."""
    total = AbHom.zero(module.group, module.group)
    power = module.identity
    for _ in range(module.n):
        total = total + power
        power = module.sigma @ power
    return total


def augmentation_image(module: CyclicModule) -> tuple[FgAbGroup, AbHom]:
    """``(sigma - 1) M``, the augmentation ideal applied to the module."""
    return hom_image(module.sigma - module.identity)


def _finite(group: FgAbGroup, name: str) -> FgAbGroup:
    if not group.is_finite:
        raise ConsistencyError(f"{name} came out infinite: {group}")
    return group


def tate_h0(module: CyclicModule) -> FgAbGroup:
    """``M^sigma / N M``."""
    _, invariants = module.invariants()
    return _finite(subgroup_quotient(invariants, norm_endo(module))[0], "H^0")


def tate_hm1(module: CyclicModule) -> FgAbGroup:
    """``ker N / (sigma - 1) M``."""
    _, kernel = hom_kernel(norm_endo(module))
    return _finite(subgroup_quotient(kernel, module.sigma - module.identity)[0], "H^-1")


def herbrand(module: CyclicModule) -> Fraction:
    return Fraction(tate_h0(module).order, tate_hm1(module).order)


def h1_vanishes(module: CyclicModule) -> bool:
    return tate_hm1(module).is_trivial


def exact_log(value: Fraction | int, p: int) -> int | None:
    """``k`` with ``p^k == value``, or ``None``."""
    value = Fraction(value)
    if value <= 0:
        return None
    k = 0
    num, den = value.numerator, value.denominator
    if num != 1 and den != 1:
        return None
    base = num if den == 1 else den
    while base % p == 0:
        base //= p
        k += 1
    if base != 1:
        return None
    return k if den == 1 else -k


@dataclass(frozen=True)
class ModuleSequence:
    """``0 -> A -f-> B -g-> C -> 0`` of modules over one cyclic group."""

    a: CyclicModule
    b: CyclicModule
    c: CyclicModule
    f: AbHom
    g: AbHom

    def problems(self) -> list[str]:
        found = []
        if not self.a.n == self.b.n == self.c.n:
            found.append("modules over different cyclic groups")
        if self.f.domain != self.a.group or self.f.codomain != self.b.group:
            return found + ["f does not map A to B"]
        if self.g.domain != self.b.group or self.g.codomain != self.c.group:
            return found + ["g does not map B to C"]
        if self.f @ self.a.sigma != self.b.sigma @ self.f:
            found.append("f is not equivariant")
        if self.g @ self.b.sigma != self.c.sigma @ self.g:
            found.append("g is not equivariant")
        if not self.f.is_injective():
            found.append("f is not injective")
        if not self.g.is_surjective():
            found.append("g is not surjective")
        if not subgroup_equal(hom_kernel(self.g)[1], hom_image(self.f)[1]):
            found.append("ker g differs from im f")
        return found


@dataclass(frozen=True)
class HerbrandMultReport:
    h_a: Fraction
    h_b: Fraction
    h_c: Fraction

    @property
    def holds(self) -> bool:
        return self.h_b == self.h_a * self.h_c

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.holds)


def verify_herbrand_mult(sequence: ModuleSequence) -> HerbrandMultReport:
    problems = sequence.problems()
    if problems:
        raise PreconditionError("Not a short exact sequence of modules: " + "; ".join(problems))
    report = HerbrandMultReport(herbrand(sequence.a), herbrand(sequence.b), herbrand(sequence.c))
    logger.info("Herbrand multiplicativity: %s", report.verdict)
    return report


@dataclass(frozen=True)
class LoghReport:
    p: int
    rank: int
    invariant_rank: int
    herbrand: Fraction
    log_h: int
    torsion_herbrand: Fraction

    @property
    def holds(self) -> bool:
        return (
            self.torsion_herbrand == 1
            and self.rank == self.p * self.invariant_rank + (1 - self.p) * self.log_h
        )

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.holds)


def _require_prime_order(module: CyclicModule, p: int):
    if not isprime(p) or module.n != p:
        raise PreconditionError(f"Expected an action of prime order p={p}, got n={module.n}")


def verify_logh(module: CyclicModule, p: int) -> LoghReport:
    """``rank M = p rank M^sigma + (1 - p) log_p h`` after splitting off torsion."""
    _require_prime_order(module, p)
    lattice = module.lattice_part()
    h = herbrand(lattice)
    log_h = exact_log(h, p)
    if log_h is None:
        raise TheoremViolation(f"Herbrand quotient {h} is not a power of {p}")
    report = LoghReport(
        p=p,
        rank=lattice.rank,
        invariant_rank=lattice.invariant_rank,
        herbrand=h,
        log_h=log_h,
        torsion_herbrand=herbrand(module.torsion_part()),
    )
    if herbrand(module) != h:
        raise ConsistencyError("Herbrand quotient changed when torsion was split off.")
    if not report.holds:
        logger.warning("Rank formula fails: %s", report)
    return report
