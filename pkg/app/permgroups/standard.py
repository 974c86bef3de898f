"""Permutation models of the small groups used by the catalogs and the tests."""
from __future__ import annotations

from typing import Callable, Hashable, Sequence

from permgroups.groups import PermGroup
from permgroups.permutation import Permutation


def cycle(n: int, degree: int | None = None) -> Permutation:
    return Permutation.from_cycles([list(range(n))], degree or n)


def cyclic(n: int) -> PermGroup:
    return PermGroup([cycle(n)])


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order ``2n``."""
    flip = Permutation(tuple((-i) % n for i in range(n)))
    return PermGroup([cycle(n), flip])


def symmetric(n: int) -> PermGroup:
    return PermGroup([Permutation.from_cycles([[0, 1]], n), cycle(n)])


def alternating4() -> PermGroup:
    return PermGroup(
        [Permutation.from_cycles([[0, 1, 2]], 4), Permutation.from_cycles([[1, 2, 3]], 4)]
    )


def product_of_cyclics(*orders: int) -> PermGroup:
    degree = sum(orders)
    gens, start = [], 0
    for n in orders:
        gens.append(Permutation.from_cycles([list(range(start, start + n))], degree))
        start += n
    return PermGroup(gens)


def regular_representation(
    elements: Sequence[Hashable],
    multiply: Callable[[Hashable, Hashable], Hashable],
    generators: Sequence[Hashable],
) -> PermGroup:
    """Left regular action: ``g`` sends point ``i`` to the index of ``g * elements[i]``."""
    index = {x: i for i, x in enumerate(elements)}
    return PermGroup(
        [Permutation(tuple(index[multiply(g, x)] for x in elements)) for g in generators]
    )


def _metacyclic(m: int, twist: int, square: int) -> PermGroup:
    """``<x, y | x^m, y^2 = x^square, y x y^-1 = x^twist>`` on pairs ``(a, b)`` = ``x^a y^b``."""
    elements = [(a, b) for b in (0, 1) for a in range(m)]

    def multiply(p, q):
        (a, b), (c, d) = p, q
        exponent = a + (twist**b) * c
        if b + d == 2:
            return ((exponent + square) % m, 0)
        return (exponent % m, b + d)

    return regular_representation(elements, multiply, [(1, 0), (0, 1)])


def quaternion(order: int = 8) -> PermGroup:
    """Generalized quaternion group of 2-power order."""
    m = order // 2
    return _metacyclic(m, -1, m // 2)


def modular16() -> PermGroup:
    return _metacyclic(8, 5, 0)


def heisenberg(p: int = 3) -> PermGroup:
    """Upper unitriangular 3x3 matrices over Z/p."""
    elements = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def multiply(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    return regular_representation(elements, multiply, [(1, 0, 0), (0, 1, 0)])


def extraspecial27_exponent9() -> PermGroup:
    """``<x, y | x^9, y^3, y x y^-1 = x^4>``."""
    elements = [(a, b) for b in range(3) for a in range(9)]

    def multiply(p, q):
        (a, b), (c, d) = p, q
        return ((a + pow(4, b, 9) * c) % 9, (b + d) % 3)

    return regular_representation(elements, multiply, [(1, 0), (0, 1)])
