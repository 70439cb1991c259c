"""Exact linear algebra over the rationals.

Row reduction with deterministic pivoting (leftmost nonzero column,
rows in arrival order), incremental rank tracking, nullspace bases and
linear solves.  Everything works on lists of `Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

__all__ = ["RowReducer", "nullspace", "solve", "primitive_integer_vector"]


class RowReducer:
    """Maintains a reduced row echelon basis of the row space."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, list[Fraction]] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Sequence[Fraction]) -> bool:
        """Reduce `row` against the basis; returns True if rank grew."""
        if len(row) != self.ncols:
            raise ValueError("row length mismatch")
        work = [Fraction(x) for x in row]
        for col in sorted(self.pivots):
            c = work[col]
            if c:
                prow = self.pivots[col]
                for j in range(col, self.ncols):
                    if prow[j]:
                        work[j] -= c * prow[j]
        lead = next((j for j in range(self.ncols) if work[j]), None)
        if lead is None:
            return False
        inv = work[lead]
        work = [x / inv for x in work]
        for col, prow in self.pivots.items():
            c = prow[lead]
            if c:
                for j in range(lead, self.ncols):
                    if work[j]:
                        prow[j] -= c * work[j]
        self.pivots[lead] = work
        return True

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the kernel, one vector per free column, in column order."""
        pivot_cols = sorted(self.pivots)
        free_cols = [j for j in range(self.ncols) if j not in self.pivots]
        basis = []
        for f in free_cols:
            vec = [Fraction(0)] * self.ncols
            vec[f] = Fraction(1)
            for p in pivot_cols:
                vec[p] = -self.pivots[p][f]
            basis.append(vec)
        return basis


def nullspace(rows: Iterable[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    red = RowReducer(ncols)
    for row in rows:
        red.add(row)
        if red.rank == ncols:
            break
    return red.nullspace()


def solve(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """One exact solution of A x = b (free coordinates zero), or None."""
    if len(rows) != len(rhs):
        raise ValueError("matrix/vector size mismatch")
    ncols = len(rows[0]) if rows else 0
    red = RowReducer(ncols + 1)
    for row, b in zip(rows, rhs):
        red.add(list(row) + [Fraction(b)])
    if ncols in red.pivots:
        return None  # a pivot in the augmented column: inconsistent
    sol = [Fraction(0)] * ncols
    for col, prow in red.pivots.items():
        sol[col] = prow[ncols]
    return sol


def primitive_integer_vector(vec: Sequence[Fraction]) -> list[Fraction]:
    """Scale to coprime integers with the first nonzero entry positive."""
    nonzero = [x for x in vec if x]
    if not nonzero:
        return [Fraction(0)] * len(vec)
    mult = lcm(*(x.denominator for x in nonzero))
    ints = [x * mult for x in vec]
    div = gcd(*(int(x) for x in ints if x))
    out = [x / div for x in ints]
    first = next(x for x in out if x)
    if first < 0:
        out = [-x for x in out]
    return out
