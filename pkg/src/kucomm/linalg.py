"""Exact linear algebra over Q built on fraction-free elimination.

Matrices are lists of rows.  Entries may be ints or Fractions; each row is
scaled to integers before elimination so the forward pass runs entirely in
integer arithmetic (Bareiss), and only the final back substitution touches
Fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


class InconsistentSystem(ArithmeticError):
    pass


def _row_denominator(row: Sequence) -> int:
    den = 1
    for v in row:
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // math.gcd(den, v.denominator)
    return den


def _integer_row(row: Sequence) -> list[int]:
    den = _row_denominator(row)
    return [int(v * den) for v in row]


def echelon(rows: Sequence[Sequence], ncols: int | None = None):
    """Fraction-free row echelon form.

    Returns ``(matrix, pivots)`` where ``matrix`` has integer entries and
    ``pivots`` lists the pivot column of each nonzero row, in order.
    Pivots are chosen left to right, so the pivot columns are the
    lexicographically first independent set of columns.
    """
    m = [_integer_row(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    prev = 1
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        top = m[r]
        a = top[c]
        for i in range(r + 1, nrows):
            row = m[i]
            b = row[c]
            if b == 0:
                if prev != 1 or a != 1:
                    for k in range(c + 1, ncols):
                        q, rem = divmod(a * row[k], prev)
                        assert rem == 0
                        row[k] = q
                continue
            for k in range(c + 1, ncols):
                q, rem = divmod(a * row[k] - b * top[k], prev)
                assert rem == 0
                row[k] = q
            row[c] = 0
        prev = a
        pivots.append(c)
        r += 1
    # rows below r are zero by construction
    return m[:r], pivots


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form over Q; returns ``(rows, pivots)``."""
    ech, pivots = echelon(rows, ncols)
    out = []
    for row, p in zip(ech, pivots):
        lead = row[p]
        out.append([Fraction(v, lead) for v in row])
    for i in range(len(out) - 1, -1, -1):
        p = pivots[i]
        for j in range(i):
            f = out[j][p]
            if f:
                rj, ri = out[j], out[i]
                for k in range(p, len(ri)):
                    if ri[k]:
                        rj[k] -= f * ri[k]
    return out, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        return [
            [Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)
        ]
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """One exact solution of ``A x = b`` with all free variables zero.

    Raises :class:`InconsistentSystem` when no solution exists.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        raise InconsistentSystem("right-hand side is not in the column span")
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def det(rows: Sequence[Sequence[int]]) -> Fraction:
    """Determinant of a square matrix via Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for r in rows:
        den = _row_denominator(r)
        scale /= den
        m.append([int(v * den) for v in r])
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        a = m[c][c]
        for i in range(c + 1, n):
            b = m[i][c]
            for k in range(c + 1, n):
                q, rem = divmod(a * m[i][k] - b * m[c][k], prev)
                assert rem == 0
                m[i][k] = q
            m[i][c] = 0
        prev = a
    return sign * scale * m[n - 1][n - 1]


def solve_many(rows: Sequence[Sequence], rhs_columns: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve ``A x = b`` for several right-hand sides sharing one matrix.

    Returns one solution vector (free variables zero) per column of
    ``rhs_columns``; raises :class:`InconsistentSystem` if any column is
    outside the span.
    """
    ncols = len(rows[0]) if rows else 0
    k = len(rhs_columns)
    aug = [list(r) + [col[i] for col in rhs_columns] for i, r in enumerate(rows)]
    red, pivots = rref(aug, ncols + k)
    if any(p >= ncols for p in pivots):
        raise InconsistentSystem("right-hand side is not in the column span")
    out = []
    for j in range(k):
        x = [Fraction(0)] * ncols
        for row, p in zip(red, pivots):
            x[p] = row[ncols + j]
        out.append(x)
    return out
