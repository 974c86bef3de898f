from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from core.exceptions import SpecFileError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of ``0..d-1``; ``p * q`` applies ``q`` first."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation of 0..{len(self.images) - 1}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> Permutation:
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            if any(x in seen for x in cycle):
                raise ValueError(f"Cycles are not disjoint: {cycles}")
            seen.update(cycle)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> Permutation:
        """Disjoint-cycle notation such as ``(0 1)(2 3)``; ``()`` is the identity."""
        text = text.strip()
        if _CYCLE_RE.sub("", text).strip():
            raise SpecFileError(f"Not a product of cycles: {text!r}")
        try:
            cycles = [
                [int(x) for x in body.replace(",", " ").split()]
                for body in _CYCLE_RE.findall(text)
            ]
        except ValueError as exc:
            raise SpecFileError(f"Non-integer point in {text!r}") from exc
        if any(not 0 <= x < degree for cycle in cycles for x in cycle):
            raise SpecFileError(f"Point outside 0..{degree - 1} in {text!r}")
        try:
            return cls.from_cycles(cycles, degree)
        except ValueError as exc:
            raise SpecFileError(str(exc)) from exc

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self.images[x] for x in other.images))

    def inverse(self) -> Permutation:
        result = [0] * self.degree
        for i, x in enumerate(self.images):
            result[x] = i
        return Permutation(tuple(result))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, result = set(), []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle, x = [], start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self.images[x]
            result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __str__(self) -> str:
        cycles = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) if cycles else "()"
