"""Dense exact linear algebra over the rationals.

Everything works on immutable Matrix values; reduction returns fresh
matrices.  Sizes in this project stay below roughly 10x10, so no attempt
is made at sparsity or pivoting heuristics beyond exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(v)


class Matrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(_frac(v) for v in row) for row in entries)
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def _check_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __neg__(self) -> "Matrix":
        return self.scale(Fraction(-1))

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix([[c * v for v in row] for row in self.entries], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            cols = [other.column(j) for j in range(other.cols)]
            return Matrix(
                [[_dot(r, c) for c in cols] for r in self.entries],
                cols=other.cols,
            )
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(row, v) for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(row) for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = 1 / m[r][c]
            m[r] = [v * inv for v in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(m, cols=self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[Vector]:
        """Basis of the right kernel, each vector normalized so its first
        nonzero coordinate is 1."""
        red, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for j in free:
            v = [Fraction(0)] * self.cols
            v[j] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red[r, j]
            basis.append(normalize_vector(tuple(v)))
        return basis

    def row_space_basis(self) -> list[Vector]:
        red, pivots = self.rref()
        return [red.row(i) for i in range(len(pivots))]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def normalize_vector(v: Vector) -> Vector:
    for c in v:
        if c != 0:
            return tuple(x / c for x in v)
    return v


def solve(a: Matrix, b: Sequence) -> Vector | None:
    """One exact solution x of a x = b, or None if the system is inconsistent."""
    if len(b) != a.rows:
        raise ValueError("rhs length mismatch")
    aug = Matrix([list(row) + [_frac(v)] for row, v in zip(a.entries, b)] or [], cols=a.cols + 1)
    if a.rows == 0:
        return (Fraction(0),) * a.cols
    red, pivots = aug.rref()
    if a.cols in pivots:
        return None
    x = [Fraction(0)] * a.cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r, a.cols]
    return tuple(x)
