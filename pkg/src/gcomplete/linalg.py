"""Small exact linear algebra over the rationals (row reduction on Fractions)."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

__all__ = ["row_reduce", "rank", "inverse", "integer_inverse"]


def row_reduce(rows):
    """Reduced row echelon form.  Returns ``(rref, pivot_columns)``."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                fac = m[i][c]
                m[i] = [a - fac * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(rows) -> int:
    return len(row_reduce(rows)[1])


def inverse(square):
    n = len(square)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(square)]
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def integer_inverse(square):
    """``(den, adj)`` with integer ``adj`` and ``inverse(square) == adj / den``."""
    inv = inverse(square)
    den = lcm(*(x.denominator for row in inv for x in row))
    return den, [[int(x * den) for x in row] for row in inv]
