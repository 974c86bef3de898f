"""The built-in catalogs.

Finite entries are permutation groups with a few declared subgroups; the co-cyclic
sweep finds the rest. Finitely presented entries declare their prime-index subgroups
by generator words.
"""
from __future__ import annotations

from typing import Callable

from sympy import factorint

from catalog.entries import CatalogEntry, SubgroupSpec
from fpgroups.presentation import parse_presentation
from permgroups import standard
from permgroups.commutators import commutator
from permgroups.groups import PermGroup
from permgroups.permutation import Permutation


def _perm(
    name: str,
    group: PermGroup,
    provenance: str,
    **subgroups: Callable[[tuple], tuple],
) -> CatalogEntry:
    gens = group.generators
    specs = tuple(SubgroupSpec(label, make(gens)) for label, make in subgroups.items())
    return CatalogEntry(name, "perm", group, specs, provenance)


def _cyclic(n: int) -> CatalogEntry:
    group = standard.cyclic(n)
    specs = tuple(
        SubgroupSpec(f"index{p}", (group.generators[0] ** p,)) for p in sorted(factorint(n))
    )
    return CatalogEntry(f"Z{n}", "perm", group, specs, f"cyclic group of order {n}")


def _dihedral(n: int) -> CatalogEntry:
    return _perm(
        f"D{n}",
        standard.dihedral(n),
        f"symmetries of the {n}-gon, order {2 * n}",
        rotations=lambda g: (g[0],),
    )


def _finite_small() -> list[CatalogEntry]:
    entries = [_cyclic(n) for n in range(2, 17)]
    entries += [_dihedral(n) for n in range(3, 13)]
    entries += [
        _perm(
            "Q8",
            standard.quaternion(8),
            "quaternion group, regular representation",
            i=lambda g: (g[0],),
            j=lambda g: (g[1],),
            k=lambda g: (g[0] * g[1],),
        ),
        _perm(
            "Q16",
            standard.quaternion(16),
            "generalized quaternion group of order 16",
            x=lambda g: (g[0],),
        ),
        _perm(
            "S3",
            standard.symmetric(3),
            "symmetric group on three points",
            A3=lambda g: (g[1],),
            C2=lambda g: (g[0],),
        ),
        _perm(
            "S4",
            standard.symmetric(4),
            "symmetric group on four points",
            A4=lambda g: (g[1] * g[0], g[0] * g[1]),
        ),
        _perm(
            "A4",
            standard.alternating4(),
            "alternating group on four points",
            V4=lambda g: (
                Permutation.from_cycles([[0, 1], [2, 3]], 4),
                Permutation.from_cycles([[0, 2], [1, 3]], 4),
            ),
        ),
        _perm(
            "Heis27",
            standard.heisenberg(3),
            "upper unitriangular 3x3 matrices over Z/3",
            xz=lambda g: (g[0], commutator(g[0], g[1])),
        ),
        _perm(
            "M16",
            standard.modular16(),
            "modular group <x, y | x^8, y^2, y x y^-1 = x^5>",
            x=lambda g: (g[0],),
        ),
        _perm(
            "Z2xZ4",
            standard.product_of_cyclics(2, 4),
            "direct product of cyclic groups of orders 2 and 4",
            Z4=lambda g: (g[1],),
        ),
    ]
    return entries


def _order_is_power_of(entry: CatalogEntry, p: int) -> bool:
    return set(factorint(entry.group.order)) == {p}


def _fp(name: str, presentation: str, provenance: str, **subgroups: str) -> CatalogEntry:
    group = parse_presentation(presentation)
    specs = tuple(
        SubgroupSpec(label, tuple(group.parse_word(w) for w in words.split(";")))
        for label, words in subgroups.items()
    )
    return CatalogEntry(name, "fp", group, specs, provenance)


def _fp_classic() -> list[CatalogEntry]:
    return [
        _fp(
            "F2",
            "< a, b >",
            "free group of rank 2",
            ker2="a; b*a*b^-1; b^2",
            ker3="a; b*a*b^-1; b^2*a*b^-2; b^3",
        ),
        _fp(
            "F3",
            "< a, b, c >",
            "free group of rank 3",
            ker2="a; b; c*a*c^-1; c*b*c^-1; c^2",
        ),
        _fp(
            "Z2",
            "< a, b | a*b*a^-1*b^-1 >",
            "free abelian group of rank 2",
            index2="a; b^2",
            index3="a; b^3",
        ),
        _fp(
            "Klein",
            "< a, b | b*a*b^-1*a >",
            "fundamental group of the Klein bottle",
            index2="a; b^2",
            index3="a; b^3",
        ),
        _fp(
            "Genus2",
            "< a, b, c, d | a*b*a^-1*b^-1*c*d*c^-1*d^-1 >",
            "fundamental group of the closed orientable surface of genus 2",
            ker2="b; c; d; a^2; a*b*a^-1; a*c*a^-1; a*d*a^-1",
        ),
        _fp(
            "Trefoil",
            "< a, b | a^2 = b^3 >",
            "trefoil knot group",
            ker2="b; a*b*a^-1; a^2",
            ker3="a; b*a*b^-1; b^2*a*b^-2; b^3",
        ),
    ]


def _entries(name: str) -> list[CatalogEntry] | None:
    if name == "finite-small":
        return _finite_small()
    if name == "finite-p2":
        return [e for e in _finite_small() if _order_is_power_of(e, 2)]
    if name == "finite-p3":
        return [e for e in _finite_small() if _order_is_power_of(e, 3)]
    if name == "fp-classic":
        return _fp_classic()
    return None


def builtin_catalog(name: str) -> list[CatalogEntry] | None:
    """A built-in catalog, validated like a user catalog; ``None`` for other names."""
    entries = _entries(name)
    for entry in entries or ():
        entry.validate()
    return entries


BUILTIN_CATALOGS = ("finite-small", "finite-p2", "finite-p3", "fp-classic")
