"""Exact row reduction over Q(i)."""

from __future__ import annotations

from .scalar import Gaussian, as_scalar

__all__ = ["row_reduce", "rank", "solve", "determinant"]


def row_reduce(rows, rhs=None):
    """Reduced row echelon form.

    Returns ``(rows, rhs, pivots)`` with fresh lists; ``rhs`` is None when
    not supplied.  Entries become ``Gaussian``.
    """
    m = [[as_scalar(v) for v in row] for row in rows]
    t = None if rhs is None else [as_scalar(v) for v in rhs]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            if t is not None:
                t[r], t[piv] = t[piv], t[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        if t is not None:
            t[r] = t[r] * inv
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
                if t is not None:
                    t[i] = t[i] - f * t[r]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, t, pivots


def rank(rows) -> int:
    return len(row_reduce(rows)[2])


def determinant(rows) -> Gaussian:
    m = [[as_scalar(v) for v in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    det = Gaussian(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Gaussian(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def solve(rows, rhs):
    """One solution of ``rows @ x = rhs`` (free variables set to 0), or None."""
    n_cols = len(rows[0]) if rows else 0
    m, t, pivots = row_reduce(rows, rhs)
    for i in range(len(pivots), len(m)):
        if t[i]:
            return None
    x = [Gaussian(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = t[i]
    return x
