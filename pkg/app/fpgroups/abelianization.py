from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from exactalg.abelian import Cokernel, FgAbGroup, cokernel_structure
from exactalg.matrix import IntMatrix
from fpgroups.presentation import FpGroup
from fpgroups.words import exponent_sums


@dataclass(frozen=True)
class FpAbelianization:
    source: FpGroup
    cokernel: Cokernel

    @property
    def group(self) -> FgAbGroup:
        return self.cokernel.group

    def project(self, word: Sequence[int]) -> tuple[int, ...]:
        return self.cokernel.image(exponent_sums(word, self.source.ngens))

    def generator_image(self, i: int) -> tuple[int, ...]:
        return self.project((i + 1,))


def abelianization_fp(group: FpGroup) -> FpAbelianization:
    """Cokernel of the relator exponent-sum matrix."""
    columns = [exponent_sums(r, group.ngens) for r in group.relators]
    relations = IntMatrix.from_columns(columns, group.ngens)
    return FpAbelianization(group, cokernel_structure(relations))


def tf_rank(group: FpGroup) -> int:
    return abelianization_fp(group).group.free_rank
