"""Commutator calculus: ``[x, y] = x y x^-1 y^-1`` and ``^a x = a x a^-1``."""
from __future__ import annotations

from typing import Collection

from permgroups.permutation import Permutation


def commutator(x: Permutation, y: Permutation) -> Permutation:
    return x * y * x.inverse() * y.inverse()


def conjugate(a: Permutation, x: Permutation) -> Permutation:
    return a * x * a.inverse()


def check_product_identities(a: Permutation, b: Permutation, c: Permutation) -> dict[str, bool]:
    """``[ab,c] = ^a[b,c] [a,c]`` and ``[a,bc] = [a,b] ^b[a,c]``."""
    return {
        "left_product": commutator(a * b, c) == conjugate(a, commutator(b, c)) * commutator(a, c),
        "right_product": (
            commutator(a, b * c) == commutator(a, b) * conjugate(b, commutator(a, c))
        ),
    }


def check_section_identities(
    s: Permutation,
    k: int,
    t1: Permutation,
    t2: Permutation,
    v1: Permutation,
    v2: Permutation,
    derived_n: Collection[Permutation],
) -> dict[str, bool]:
    """Identities behind ``[G,G] = [s,N][N,N]`` for ``G = <s>N``.

    ``t1``, ``t2`` are powers of ``s``; ``v1``, ``v2`` lie in ``N``; ``derived_n`` is the
    element set of ``[N,N]``; ``k >= 1``.
    """
    s_inv = s.inverse()
    expansion = (
        conjugate(t1, commutator(v1, t2))
        * conjugate(t1 * t2, commutator(v1, v2))
        * conjugate(t2, commutator(t1, v2))
    )
    additive_defect = (commutator(s, v1) * commutator(s, v2)).inverse() * commutator(s, v1 * v2)
    return {
        "section_expansion": commutator(t1 * v1, t2 * v2) == expansion,
        "additive_mod_derived": additive_defect in derived_n,
        "power_step": commutator(s**k, v1)
        == commutator(s ** (k - 1), conjugate(s, v1)) * commutator(s, v1),
        "inverse": commutator(s_inv, v1) == commutator(s, conjugate(s_inv, v1)).inverse(),
        "negative_power_step": commutator(s ** (-k), v1)
        == commutator(s ** (1 - k), conjugate(s_inv, v1)) * commutator(s_inv, v1),
    }
