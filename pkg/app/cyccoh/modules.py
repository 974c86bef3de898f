"""Modules over a finite cyclic group ``C_n = <sigma>`` and the standard ones for ``C_p``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from core.exceptions import PreconditionError
from exactalg.abelian import AbHom, FgAbGroup, direct_sum, hom_kernel
from exactalg.matrix import IntMatrix


@dataclass(frozen=True)
class CyclicModule:
    """``group`` with the action of a generator ``sigma`` of order dividing ``n``."""

    group: FgAbGroup
    sigma: AbHom
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Cyclic group order must be positive, got {self.n}")
        if self.sigma.domain != self.group or self.sigma.codomain != self.group:
            raise ValueError("sigma must be an endomorphism of the module.")
        if not self.sigma.is_well_defined():
            raise ValueError("sigma does not respect the module relations.")
        if self.sigma.power(self.n) != AbHom.identity(self.group):
            raise ValueError(f"sigma^{self.n} is not the identity.")

    @property
    def rank(self) -> int:
        return self.group.free_rank

    @property
    def identity(self) -> AbHom:
        return AbHom.identity(self.group)

    def invariants(self) -> tuple[FgAbGroup, AbHom]:
        return hom_kernel(self.sigma - self.identity)

    @property
    def invariant_rank(self) -> int:
        return self.invariants()[0].free_rank

    def with_generator(self, k: int) -> CyclicModule:
        """The same module seen through the generator ``sigma^k``."""
        if math.gcd(k, self.n) != 1:
            raise PreconditionError(f"sigma^{k} does not generate a group of order {self.n}")
        return CyclicModule(self.group, self.sigma.power(k % self.n), self.n)

    def torsion_part(self) -> CyclicModule:
        t = len(self.group.torsion)
        group = FgAbGroup(self.group.torsion)
        block = self.sigma.matrix.block(range(t), range(t))
        return CyclicModule(group, AbHom(group, group, block), self.n)

    def lattice_part(self) -> CyclicModule:
        t, m = len(self.group.torsion), self.group.ngens
        group = FgAbGroup.free(self.rank)
        block = self.sigma.matrix.block(range(t, m), range(t, m))
        return CyclicModule(group, AbHom(group, group, block), self.n)

    def __str__(self) -> str:
        return f"{self.group} with sigma of order dividing {self.n}"


def from_matrix(group: FgAbGroup, sigma: IntMatrix, n: int) -> CyclicModule:
    return CyclicModule(group, AbHom(group, group, sigma), n)


def trivial_lattice(rank: int, n: int) -> CyclicModule:
    group = FgAbGroup.free(rank)
    return CyclicModule(group, AbHom.identity(group), n)


def regular(n: int) -> CyclicModule:
    """``Z[C_n]`` with ``sigma`` shifting the basis ``1, g, ..., g^(n-1)``."""
    group = FgAbGroup.free(n)
    images = [[int(i == (j + 1) % n) for i in range(n)] for j in range(n)]
    return CyclicModule(group, AbHom.from_images(group, group, images), n)


def augmentation_ideal(n: int) -> CyclicModule:
    """Kernel of ``Z[C_n] -> Z`` on the basis ``b_i = g^i - 1``, ``1 <= i < n``.

    ``sigma b_i = b_(i+1) - b_1`` and ``sigma b_(n-1) = -b_1``.
    """
    m = n - 1
    group = FgAbGroup.free(m)
    images = []
    for i in range(m):
        image = [0] * m
        image[0] -= 1
        if i + 1 < m:
            image[i + 1] += 1
        images.append(image)
    return CyclicModule(group, AbHom.from_images(group, group, images), n)


def finite_cyclic(order: int, unit: int, n: int) -> CyclicModule:
    """``Z/order`` with ``sigma`` acting as multiplication by ``unit``."""
    group = FgAbGroup.cyclic(order)
    return CyclicModule(group, AbHom.scalar(group, unit), n)


def direct_sum_modules(modules: Sequence[CyclicModule]) -> CyclicModule:
    if len({m.n for m in modules}) > 1:
        raise PreconditionError("Summands are modules over different cyclic groups.")
    total = direct_sum([m.group for m in modules])
    sigma = AbHom.zero(total.group, total.group)
    for m, inj, proj in zip(modules, total.injections, total.projections):
        sigma = sigma + inj @ m.sigma @ proj
    return CyclicModule(total.group, sigma, modules[0].n)


def conjugate_lattice(module: CyclicModule, q: IntMatrix, q_inv: IntMatrix) -> CyclicModule:
    """The lattice with action ``q sigma q^-1``, isomorphic to ``module`` through ``q``."""
    if not module.group.is_torsion_free:
        raise PreconditionError("Only lattices can be conjugated by a unimodular matrix.")
    group = module.group
    return CyclicModule(group, AbHom(group, group, q @ module.sigma.matrix @ q_inv), module.n)


def diederichsen_lattice(r: int, s: int, t: int, p: int) -> CyclicModule:
    """``Z^r + Omega^s + Z[C_p]^t`` over ``C_p``."""
    parts = [trivial_lattice(1, p)] * r + [augmentation_ideal(p)] * s + [regular(p)] * t
    return direct_sum_modules(parts) if parts else trivial_lattice(0, p)
