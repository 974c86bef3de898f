"""Finitely generated abelian groups in invariant-factor form and homomorphisms between them.

Every group here is a quotient of a free cover ``Z^n`` (one basis vector per canonical
generator) by its relation lattice, spanned by ``d_i e_i`` for the torsion coordinates.
Kernels, images, cokernels and all derived groups are computed as subquotients
``T / B`` of some ``Z^m`` with ``B ⊆ T``, both given by spanning columns.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from core.exceptions import ConsistencyError, MembershipError, PreconditionError
from exactalg.matrix import IntMatrix
from exactalg.normal_forms import (
    SmithDecomposition,
    hermite_normal_form,
    lattice_basis,
    nullspace_basis,
    smith_normal_form,
    solve_in_lattice,
)

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class FgAbGroup:
    """``Z/d_1 + ... + Z/d_k + Z^free_rank`` with ``d_1 | d_2 | ... | d_k`` and ``d_i >= 2``."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("Free rank must be non-negative.")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"Invariant factors must be at least 2: {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"Invariant factors must form a divisibility chain: {self.torsion}")

    @classmethod
    def trivial(cls) -> FgAbGroup:
        return cls((), 0)

    @classmethod
    def free(cls, rank: int) -> FgAbGroup:
        return cls((), rank)

    @classmethod
    def cyclic(cls, n: int) -> FgAbGroup:
        """``Z/n``; ``n = 0`` gives ``Z`` and ``n = 1`` the trivial group."""
        n = abs(n)
        if n == 0:
            return cls((), 1)
        return cls((n,) if n > 1 else (), 0)

    @property
    def ngens(self) -> int:
        return len(self.torsion) + self.free_rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    @property
    def is_cyclic(self) -> bool:
        return self.ngens <= 1

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite.")
        result = 1
        for d in self.torsion:
            result *= d
        return result

    @property
    def exponent(self) -> int:
        """Largest invariant factor; 0 for infinite groups, 1 for the trivial group."""
        if not self.is_finite:
            return 0
        return self.torsion[-1] if self.torsion else 1

    def relation_matrix(self) -> IntMatrix:
        return IntMatrix.diagonal(self.torsion, rows=self.ngens, cols=len(self.torsion))

    def reduce(self, vector: Sequence[int]) -> Vector:
        if len(vector) != self.ngens:
            raise ValueError(f"Element of length {len(vector)} for {self}.")
        k = len(self.torsion)
        return tuple(x % self.torsion[i] if i < k else x for i, x in enumerate(vector))

    def zero(self) -> Vector:
        return (0,) * self.ngens

    def is_zero(self, vector: Sequence[int]) -> bool:
        return not any(self.reduce(vector))

    def add(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        return self.reduce([a + b for a, b in zip(x, y)])

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.ngens))

    def elements(self) -> Iterator[Vector]:
        if not self.is_finite:
            raise ValueError(f"Cannot list the elements of {self}.")
        return itertools.product(*(range(d) for d in self.torsion))

    def element_order(self, vector: Sequence[int]) -> int:
        """Order of an element; 0 when it has infinite order."""
        vector = self.reduce(vector)
        if any(vector[len(self.torsion) :]):
            return 0
        result = 1
        for x, d in zip(vector, self.torsion):
            result = math.lcm(result, d // math.gcd(x, d))
        return result

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AbHom:
    """Homomorphism given by the images (columns) of the domain's canonical generators.

    Columns are reduced in the codomain on construction so equal maps compare equal.
    """

    domain: FgAbGroup
    codomain: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.ngens, self.domain.ngens):
            raise ValueError(
                f"Matrix shape {self.matrix.shape} does not fit {self.domain} -> {self.codomain}."
            )
        columns = [self.codomain.reduce(c) for c in self.matrix.columns()]
        object.__setattr__(
            self, "matrix", IntMatrix.from_columns(columns, self.codomain.ngens)
        )

    @classmethod
    def from_images(
        cls, domain: FgAbGroup, codomain: FgAbGroup, images: Sequence[Sequence[int]]
    ) -> AbHom:
        return cls(domain, codomain, IntMatrix.from_columns(images, codomain.ngens))

    @classmethod
    def identity(cls, group: FgAbGroup) -> AbHom:
        return cls(group, group, IntMatrix.identity(group.ngens))

    @classmethod
    def zero(cls, domain: FgAbGroup, codomain: FgAbGroup) -> AbHom:
        return cls(domain, codomain, IntMatrix.zeros(codomain.ngens, domain.ngens))

    @classmethod
    def scalar(cls, group: FgAbGroup, k: int) -> AbHom:
        return cls(group, group, IntMatrix.identity(group.ngens).scale(k))

    def apply(self, vector: Sequence[int]) -> Vector:
        return self.codomain.reduce(self.matrix.apply(self.domain.reduce(vector)))

    def image_of_generator(self, i: int) -> Vector:
        return self.matrix.column(i)

    def __matmul__(self, other: AbHom) -> AbHom:
        """``self ∘ other``."""
        if other.codomain != self.domain:
            raise PreconditionError(f"Cannot compose {other.codomain} into {self.domain}.")
        return AbHom(other.domain, self.codomain, self.matrix @ other.matrix)

    def _check_parallel(self, other: AbHom):
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise PreconditionError("Homomorphisms have different domains or codomains.")

    def __add__(self, other: AbHom) -> AbHom:
        self._check_parallel(other)
        return AbHom(self.domain, self.codomain, self.matrix + other.matrix)

    def __sub__(self, other: AbHom) -> AbHom:
        self._check_parallel(other)
        return AbHom(self.domain, self.codomain, self.matrix - other.matrix)

    def __neg__(self) -> AbHom:
        return self.scale(-1)

    def scale(self, k: int) -> AbHom:
        return AbHom(self.domain, self.codomain, self.matrix.scale(k))

    def power(self, k: int) -> AbHom:
        if self.domain != self.codomain:
            raise PreconditionError("Only endomorphisms have powers.")
        result = AbHom.identity(self.domain)
        for _ in range(k):
            result = self @ result
        return result

    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    def is_well_defined(self) -> bool:
        return all(
            self.codomain.is_zero([d * x for x in self.matrix.column(i)])
            for i, d in enumerate(self.domain.torsion)
        )

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_injective(self) -> bool:
        return hom_kernel(self)[0].is_trivial

    def is_surjective(self) -> bool:
        return hom_cokernel(self)[0].is_trivial

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()


@dataclass(frozen=True)
class Cokernel:
    """``Z^m / span(columns)`` in canonical form.

    ``projection`` sends ambient vectors to group coordinates, ``lift`` gives an ambient
    preimage for each canonical generator.
    """

    group: FgAbGroup
    projection: IntMatrix
    lift: IntMatrix

    def image(self, vector: Sequence[int]) -> Vector:
        return self.group.reduce(self.projection.apply(vector))


def cokernel_structure(relations: IntMatrix) -> Cokernel:
    snf = smith_normal_form(relations)
    diagonal = snf.diagonal
    m = relations.rows
    invariants = [diagonal[i] if i < len(diagonal) else 0 for i in range(m)]
    keep = [i for i, d in enumerate(invariants) if d != 1]
    torsion = tuple(d for d in invariants if d > 1)
    group = FgAbGroup(torsion, sum(1 for d in invariants if d == 0))
    return Cokernel(
        group=group,
        projection=snf.u.select_rows(keep) if keep else IntMatrix.zeros(0, m),
        lift=snf.u_inv.select_columns(keep) if keep else IntMatrix.zeros(m, 0),
    )


@dataclass(frozen=True)
class Subquotient:
    """The group ``T / B`` for lattices ``B ⊆ T ⊆ Z^m``.

    ``top`` is the Hermite basis of ``T``; ``quotient`` presents ``T / B`` in the
    coordinates of that basis.
    """

    ambient: int
    top: IntMatrix
    bottom: IntMatrix
    quotient: Cokernel
    top_snf: SmithDecomposition = field(compare=False, repr=False)

    @property
    def group(self) -> FgAbGroup:
        return self.quotient.group

    def coordinates(self, vector: Sequence[int]) -> Vector | None:
        return solve_in_lattice(self.top, vector, self.top_snf)

    def contains(self, vector: Sequence[int]) -> bool:
        return self.coordinates(vector) is not None

    def element(self, vector: Sequence[int]) -> Vector:
        coordinates = self.coordinates(vector)
        if coordinates is None:
            raise MembershipError(f"{tuple(vector)} does not lie in the subquotient's top.")
        return self.quotient.image(coordinates)

    def lift_matrix(self) -> IntMatrix:
        return self.top @ self.quotient.lift


def subquotient(top: IntMatrix, bottom: IntMatrix) -> Subquotient:
    if top.rows != bottom.rows:
        raise ValueError("Top and bottom live in different ambient lattices.")
    basis = lattice_basis(top)
    top_snf = smith_normal_form(basis)
    coordinates = []
    for column in bottom.columns():
        c = solve_in_lattice(basis, column, top_snf)
        if c is None:
            raise ConsistencyError("Bottom lattice is not contained in the top lattice.")
        coordinates.append(c)
    quotient = cokernel_structure(IntMatrix.from_columns(coordinates, basis.cols))
    return Subquotient(top.rows, basis, bottom, quotient, top_snf)


def subquotient_of(group: FgAbGroup, top: IntMatrix, bottom: IntMatrix) -> Subquotient:
    """``(top + R) / (bottom + R)`` for the relation lattice ``R`` of ``group``."""
    relations = group.relation_matrix()
    return subquotient(top.hstack(relations), bottom.hstack(relations))


def lattice_contains(generators: IntMatrix, vectors: IntMatrix) -> bool:
    basis = lattice_basis(generators)
    snf = smith_normal_form(basis)
    return all(solve_in_lattice(basis, v, snf) is not None for v in vectors.columns())


def hom_kernel(f: AbHom) -> tuple[FgAbGroup, AbHom]:
    a = f.domain.ngens
    system = f.matrix.hstack(f.codomain.relation_matrix())
    null = nullspace_basis(system)
    preimages = null.select_rows(range(a)) if a else IntMatrix.zeros(0, null.cols)
    sq = subquotient_of(f.domain, preimages, IntMatrix.zeros(a, 0))
    inclusion = AbHom(sq.group, f.domain, sq.lift_matrix())
    return sq.group, inclusion


def hom_cokernel(f: AbHom) -> tuple[FgAbGroup, AbHom]:
    b = f.codomain.ngens
    sq = subquotient_of(f.codomain, IntMatrix.identity(b), f.matrix)
    projection = AbHom.from_images(
        f.codomain, sq.group, [sq.element(f.codomain.basis_vector(j)) for j in range(b)]
    )
    return sq.group, projection


def hom_image(f: AbHom) -> tuple[FgAbGroup, AbHom]:
    sq = subquotient_of(f.codomain, f.matrix, IntMatrix.zeros(f.codomain.ngens, 0))
    return sq.group, AbHom(sq.group, f.codomain, sq.lift_matrix())


def _span_hnf(generators: IntMatrix, group: FgAbGroup) -> IntMatrix:
    return hermite_normal_form(generators.hstack(group.relation_matrix()))


def subgroup_equal(incl1: AbHom, incl2: AbHom) -> bool:
    if incl1.codomain != incl2.codomain:
        raise PreconditionError(f"Subgroups of {incl1.codomain} and {incl2.codomain} compared.")
    return _span_hnf(incl1.matrix, incl1.codomain) == _span_hnf(incl2.matrix, incl2.codomain)


def subgroup_contains(outer: AbHom, inner: AbHom) -> bool:
    """Whether the image of ``inner`` lies inside the image of ``outer``."""
    if outer.codomain != inner.codomain:
        raise PreconditionError(f"Subgroups of {outer.codomain} and {inner.codomain} compared.")
    relations = outer.codomain.relation_matrix()
    return lattice_contains(outer.matrix.hstack(relations), inner.matrix)


def induced_hom(source: Subquotient, target: Subquotient, ambient_map: IntMatrix) -> AbHom:
    """The map ``source -> target`` induced by an ambient integer matrix."""
    images = []
    for lift in source.lift_matrix().columns():
        try:
            images.append(target.element(ambient_map.apply(lift)))
        except MembershipError as exc:
            raise ConsistencyError("Ambient map leaves the target subquotient.") from exc
    f = AbHom.from_images(source.group, target.group, images)
    if not f.is_well_defined():
        raise ConsistencyError("Induced map does not respect the source relations.")
    return f


@dataclass(frozen=True)
class DirectSum:
    group: FgAbGroup
    injections: tuple[AbHom, ...]
    projections: tuple[AbHom, ...]


def direct_sum(groups: Sequence[FgAbGroup]) -> DirectSum:
    """Canonical form of a direct sum with its structure maps."""
    sizes = [g.ngens for g in groups]
    total = sum(sizes)
    offsets = list(itertools.accumulate([0] + sizes))
    relations = IntMatrix.zeros(total, 0)
    for g, offset in zip(groups, offsets):
        for i, d in enumerate(g.torsion):
            column = [0] * total
            column[offset + i] = d
            relations = relations.hstack(IntMatrix.from_columns([column], total))
    coker = cokernel_structure(relations)
    injections, projections = [], []
    for g, offset, size in zip(groups, offsets, sizes):
        images = []
        for i in range(size):
            e = [0] * total
            e[offset + i] = 1
            images.append(coker.image(e))
        injections.append(AbHom.from_images(g, coker.group, images))
        block = coker.lift.select_rows(range(offset, offset + size)) if size else None
        projections.append(
            AbHom(coker.group, g, block)
            if block is not None
            else AbHom.zero(coker.group, g)
        )
    logger.debug("Direct sum of %s is %s", [str(g) for g in groups], coker.group)
    return DirectSum(coker.group, tuple(injections), tuple(projections))


def factor_through(inclusion: AbHom, f: AbHom) -> AbHom:
    """The unique ``g`` with ``inclusion @ g == f`` for an injective ``inclusion``."""
    if inclusion.codomain != f.codomain:
        raise PreconditionError("Maps land in different groups.")
    sub = inclusion.domain
    system = inclusion.matrix.hstack(f.codomain.relation_matrix())
    snf = smith_normal_form(system)
    images = []
    for j in range(f.domain.ngens):
        solution = solve_in_lattice(system, f.matrix.column(j), snf)
        if solution is None:
            raise MembershipError("Image leaves the subgroup it should factor through.")
        images.append(sub.reduce(solution[: sub.ngens]))
    return AbHom.from_images(f.domain, sub, images)


def subgroup_quotient(outer: AbHom, inner: AbHom) -> tuple[FgAbGroup, AbHom]:
    """``im(outer) / im(inner)`` with the projection from the domain of ``outer``."""
    return hom_cokernel(factor_through(outer, inner))


def joint_kernel(homs: Sequence[AbHom]) -> tuple[FgAbGroup, AbHom]:
    """Common kernel of maps with one domain."""
    domain = homs[0].domain
    total = direct_sum([f.codomain for f in homs])
    stacked = AbHom.zero(domain, total.group)
    for f, injection in zip(homs, total.injections):
        stacked = stacked + injection @ f
    return hom_kernel(stacked)
