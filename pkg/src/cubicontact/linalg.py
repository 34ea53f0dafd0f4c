"""Exact dense linear algebra over the rationals.

Plain Gaussian elimination with first-nonzero pivoting; no floating
point, no pivot-size heuristics.  Matrices are lists of lists of
Fraction (rows).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Q0, Q1


def mat_copy(rows):
    return [list(r) for r in rows]


def mat_rank(rows) -> int:
    if not rows:
        return 0
    m = mat_copy(rows)
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Q1 / m[rank][col]
        for r in range(rank + 1, n_rows):
            f = m[r][col]
            if f == 0:
                continue
            f = f * inv
            row, prow = m[r], m[rank]
            for c in range(col, n_cols):
                row[c] -= prow[c] * f
        rank += 1
        if rank == n_rows:
            break
    return rank


def mat_det(rows) -> Fraction:
    n = len(rows)
    if n == 0:
        return Q1
    m = mat_copy(rows)
    det = Q1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Q0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Q1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col]
            if f == 0:
                continue
            f = f * inv
            row, prow = m[r], m[col]
            for c in range(col, n):
                row[c] -= prow[c] * f
    return det


def mat_solve(a, b):
    """Solve a x = b for square a; b is a vector.  Raises on singular a."""
    n = len(a)
    m = [list(row) + [bv] for row, bv in zip(mat_copy(a), b)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = Q1 / m[col][col]
        for c in range(col, n + 1):
            m[col][c] *= inv
        for r in range(n):
            if r == col:
                continue
            f = m[r][col]
            if f == 0:
                continue
            for c in range(col, n + 1):
                m[r][c] -= m[col][c] * f
    return [m[r][n] for r in range(n)]


def mat_inv(a):
    n = len(a)
    cols = []
    for j in range(n):
        e = [Q1 if i == j else Q0 for i in range(n)]
        cols.append(mat_solve(a, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[Q0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            f = ai[t]
            if f == 0:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j]:
                    oi[j] += f * bt[j]
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = Q0
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out.append(s)
    return out
