from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of unbounded integers, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Matrix dimensions must be non-negative.")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Expected {self.rows * self.cols} entries, got {len(self.entries)}."
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        if cols is None:
            if not rows:
                raise ValueError("Column count is required for a matrix without rows.")
            cols = len(rows[0])
        if any(len(row) != cols for row in rows):
            raise ValueError("Rows have different lengths.")
        return cls(len(rows), cols, tuple(int(x) for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        if any(len(col) != rows for col in columns):
            raise ValueError("Columns have different lengths.")
        return cls(
            rows,
            len(columns),
            tuple(int(columns[j][i]) for i in range(rows) for j in range(len(columns))),
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None):
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        entries = [0] * (rows * cols)
        for i, value in enumerate(values):
            entries[i * cols + i] = value
        return cls(rows, cols, tuple(entries))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_columns([self.row(i) for i in range(self.rows)], self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}.")
        other_cols = other.columns()
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                sum(a * b for a, b in zip(self.row(i), col) if a)
                for i in range(self.rows)
                for col in other_cols
            ),
        )

    def _check_same_shape(self, other: IntMatrix):
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch {self.shape} vs {other.shape}.")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise ValueError(f"Vector of length {len(vector)} for {self.shape} matrix.")
        return tuple(
            sum(a * x for a, x in zip(self.row(i), vector) if a) for i in range(self.rows)
        )

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts.")
        return IntMatrix.from_columns(self.columns() + other.columns(), self.rows)

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.cols:
            raise ValueError("vstack needs equal column counts.")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def select_rows(self, indices: Iterable[int]) -> IntMatrix:
        return IntMatrix.from_rows([self.row(i) for i in indices], self.cols)

    def select_columns(self, indices: Iterable[int]) -> IntMatrix:
        return IntMatrix.from_columns([self.column(j) for j in indices], self.rows)

    def block(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> IntMatrix:
        return IntMatrix.from_rows(
            [[self[i, j] for j in col_indices] for i in row_indices], len(col_indices)
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def power(self, k: int) -> IntMatrix:
        if not self.is_square() or k < 0:
            raise ValueError("Only non-negative powers of square matrices are defined.")
        result, base = IntMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def determinant(self) -> int:
        """Fraction-free Bareiss elimination."""
        if not self.is_square():
            raise ValueError("Determinant of a non-square matrix.")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign, previous = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
            previous = a[k][k]
        return sign * a[n - 1][n - 1]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


def random_unimodular(n: int, rng: random.Random, steps: int = 12) -> tuple[IntMatrix, IntMatrix]:
    """Return ``(Q, Q^-1)`` built from random elementary operations."""
    q = IntMatrix.identity(n).to_rows()
    q_inv = IntMatrix.identity(n).to_rows()
    if n < 2:
        return IntMatrix.identity(n), IntMatrix.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice((-2, -1, 1, 2))
        # Q <- E Q with E = I + k e_ij; Q^-1 <- Q^-1 E^-1
        q[i] = [a + k * b for a, b in zip(q[i], q[j])]
        for row in q_inv:
            row[j] -= k * row[i]
        if rng.random() < 0.25:
            q[i], q[j] = q[j], q[i]
            for row in q_inv:
                row[i], row[j] = row[j], row[i]
    return IntMatrix.from_rows(q, n), IntMatrix.from_rows(q_inv, n)
