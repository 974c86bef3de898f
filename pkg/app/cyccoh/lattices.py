"""Multiplicities of the indecomposable lattices over a cyclic group of prime order.

Every ``Z[C_p]``-lattice is built from ``r`` trivial summands, ``s`` copies of the
augmentation ideal and ``t`` free summands (up to the ideal-class twist of the
non-trivial summands, which the multiplicities do not see). The rank equations alone
are dependent, so ``r`` and ``s`` are read off the Tate groups, which are elementary
abelian of orders ``p^r`` and ``p^s``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core.exceptions import LatticeDecompositionError, PreconditionError
from cyccoh.modules import CyclicModule
from cyccoh.tate import exact_log, herbrand, tate_h0, tate_hm1

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeDecomposition:
    r: int
    s: int
    t: int
    p: int

    @property
    def rank(self) -> int:
        return self.r + self.s * (self.p - 1) + self.t * self.p

    @property
    def invariant_rank(self) -> int:
        return self.r + self.t

    @property
    def log_herbrand(self) -> int:
        return self.r - self.s


def diederichsen_multiplicities(module: CyclicModule, p: int) -> LatticeDecomposition:
    if module.n != p:
        raise PreconditionError(f"Expected an action of order {p}, got {module.n}")
    if not module.group.is_torsion_free:
        raise LatticeDecompositionError(f"{module.group} has torsion; split it off first")
    h0, hm1 = tate_h0(module), tate_hm1(module)
    r, s = exact_log(h0.order, p), exact_log(hm1.order, p)
    if r is None or s is None or h0.exponent not in (1, p) or hm1.exponent not in (1, p):
        raise LatticeDecompositionError(
            f"Tate groups {h0} and {hm1} are not elementary abelian {p}-groups"
        )
    decomposition = LatticeDecomposition(r, s, module.invariant_rank - r, p)
    if (
        decomposition.t < 0
        or decomposition.rank != module.rank
        or decomposition.log_herbrand != exact_log(herbrand(module), p)
    ):
        raise LatticeDecompositionError(
            f"No non-negative solution for rank {module.rank}, "
            f"invariant rank {module.invariant_rank}: {decomposition}"
        )
    logger.debug("Lattice of rank %d decomposes as %s", module.rank, decomposition)
    return decomposition
