"""Smith normal form of integer matrices and abelian group invariants.

Classical row/column reduction with the pivot chosen as the nonzero entry
of minimal absolute value; all arithmetic stays in Python's unbounded ints.
Cokernels are read with columns as generators and rows as relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix; entries row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        flat = tuple(int(v) for r in rows for v in r)
        return cls(len(rows), cols, flat)

    def to_lists(self) -> list[list[int]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d1 | d2 | ... (each > 1) and the free rank of the cokernel."""

    factors: tuple[int, ...]
    free_rank: int

    def cokernel_order(self) -> int | None:
        """Order of the torsion part if finite; None when free rank > 0."""
        if self.free_rank:
            return None
        order = 1
        for d in self.factors:
            order *= d
        return order

    def describe(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.factors]
        return " + ".join(parts) if parts else "0"


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Diagonalize by unimodular row/column operations and return the
    invariant factor data of the cokernel Z^cols / (row lattice)."""
    a = m.to_lists()
    nr, nc = m.rows, m.cols
    diag: list[int] = []
    top = 0
    while True:
        pivot = _min_abs_entry(a, top, nr, nc)
        if pivot is None:
            break
        while True:
            pi, pj = pivot
            if pi != top:
                a[top], a[pi] = a[pi], a[top]
            if pj != top:
                for row in a:
                    row[top], row[pj] = row[pj], row[top]
            p = a[top][top]
            dirty = False
            for i in range(top + 1, nr):
                q = _round_div(a[i][top], p)
                if q:
                    for j in range(top, nc):
                        a[i][j] -= q * a[top][j]
                if a[i][top]:
                    dirty = True
            for j in range(top + 1, nc):
                q = _round_div(a[top][j], p)
                if q:
                    for i in range(top, nr):
                        a[i][j] -= q * a[i][top]
                if a[top][j]:
                    dirty = True
            if not dirty:
                break
            pivot = _min_abs_entry(a, top, nr, nc)
        diag.append(abs(a[top][top]))
        top += 1
        if top >= min(nr, nc):
            break
    diag = _enforce_divisibility(diag)
    factors = tuple(d for d in diag if d > 1)
    free_rank = nc - len(diag)
    return SmithForm(factors, free_rank)


def _min_abs_entry(a, top, nr, nc):
    best = None
    for i in range(top, nr):
        for j in range(top, nc):
            v = a[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return (i, j)
    return None if best is None else (best[1], best[2])


def _round_div(a: int, b: int) -> int:
    """Quotient minimizing |a - q b|.

    Python's divmod remainder has the divisor's sign, so moving the
    quotient up by one always shrinks an oversized remainder.
    """
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def _enforce_divisibility(diag: list[int]) -> list[int]:
    d = list(diag)
    n = len(d)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if d[i] and d[i + 1] % d[i] != 0:
                g = _gcd(d[i], d[i + 1])
                lcm = d[i] * d[i + 1] // g
                d[i], d[i + 1] = g, lcm
                changed = True
        d.sort(key=lambda v: (v == 0, v))
    return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def abelian_invariants(relators: Iterable[Sequence[int]], ngens: int) -> SmithForm:
    """Invariant factors of the abelian group on ngens generators subject to
    the given integer relation rows."""
    return smith_normal_form(IntMatrix.from_rows(relators, cols=ngens))
