"""Smith and Hermite normal forms over the integers, and lattice helpers built on them."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from exactalg.matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithDecomposition:
    """``u @ source @ v == s`` with ``u``, ``v`` unimodular and ``s`` diagonal."""

    source: IntMatrix
    u: IntMatrix
    s: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.s[i, i] for i in range(min(self.s.rows, self.s.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    m, n = a.shape
    s = a.to_rows()
    u = IntMatrix.identity(m).to_rows()
    u_inv = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()
    v_inv = IntMatrix.identity(n).to_rows()

    # Every row operation on s is mirrored on u, its inverse on the columns of u_inv;
    # column operations go to v and, inverted, to the rows of v_inv.
    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]
        for row in u_inv:
            row[i], row[j] = row[j], row[i]

    def add_row(target, source, k):
        s[target] = [x + k * y for x, y in zip(s[target], s[source])]
        u[target] = [x + k * y for x, y in zip(u[target], u[source])]
        for row in u_inv:
            row[source] -= k * row[target]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for row in u_inv:
            row[i] = -row[i]

    def swap_cols(i, j):
        for mat in (s, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def add_col(target, source, k):
        for mat in (s, v):
            for row in mat:
                row[target] += k * row[source]
        v_inv[source] = [x - k * y for x, y in zip(v_inv[source], v_inv[target])]

    t = 0
    while t < min(m, n):
        candidates = [
            (abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j] != 0
        ]
        if not candidates:
            break
        _, i, j = min(candidates)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            pivot = s[t][t]
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // pivot))
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // pivot))
            leftovers = [(abs(s[i][t]), i, None) for i in range(t + 1, m) if s[i][t]]
            leftovers += [(abs(s[t][j]), None, j) for j in range(t + 1, n) if s[t][j]]
            if leftovers:
                _, i, j = min(leftovers, key=lambda x: x[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % pivot),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if s[t][t] < 0:
            negate_row(t)
        t += 1

    logger.debug("Smith normal form of %dx%d matrix, rank %d", m, n, t)
    return SmithDecomposition(
        source=a,
        u=IntMatrix.from_rows(u, m),
        s=IntMatrix.from_rows(s, n),
        v=IntMatrix.from_rows(v, n),
        u_inv=IntMatrix.from_rows(u_inv, m),
        v_inv=IntMatrix.from_rows(v_inv, n),
    )


def _row_hermite(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Row-style HNF of the row span; zero rows dropped."""
    rows = [list(r) for r in rows]
    pivot_row = 0
    for col in range(ncols):
        while True:
            live = [i for i in range(pivot_row, len(rows)) if rows[i][col] != 0]
            if not live:
                break
            best = min(live, key=lambda i: abs(rows[i][col]))
            rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
            pivot = rows[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // pivot
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
                    if rows[i][col]:
                        done = False
            if done:
                break
        if pivot_row < len(rows) and rows[pivot_row][col] != 0:
            if rows[pivot_row][col] < 0:
                rows[pivot_row] = [-x for x in rows[pivot_row]]
            pivot = rows[pivot_row][col]
            for i in range(pivot_row):
                q = rows[i][col] // pivot
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
            pivot_row += 1
    return rows[:pivot_row]


def hermite_normal_form(a: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form: a canonical basis (as columns) of the column span."""
    basis = _row_hermite([list(c) for c in a.columns()], a.rows)
    return IntMatrix.from_columns(basis, a.rows)


def lattice_basis(a: IntMatrix) -> IntMatrix:
    return hermite_normal_form(a)


def nullspace_basis(a: IntMatrix) -> IntMatrix:
    """Columns spanning ``{x : a x = 0}`` over the integers."""
    snf = smith_normal_form(a)
    return snf.v.select_columns(range(snf.rank, a.cols))


def solve_in_lattice(
    basis: IntMatrix, vector: Sequence[int], snf: SmithDecomposition | None = None
) -> tuple[int, ...] | None:
    """Coordinates ``c`` with ``basis @ c == vector``, or ``None`` if there are none.

    ``basis`` must have full column rank so the answer is unique.
    """
    snf = snf or smith_normal_form(basis)
    w = snf.u.apply(vector)
    diagonal = snf.diagonal
    solution = []
    for i, value in enumerate(w):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            if value != 0:
                return None
            if i < basis.cols:
                solution.append(0)
        else:
            if value % d:
                return None
            solution.append(value // d)
    solution += [0] * (basis.cols - len(solution))
    return snf.v.apply(solution[: basis.cols])
