"""Pure-Python integer kernels.

Reference implementation of the routines in ``_ckernels.pyx``. Both
backends take and return plain Python ints so callers never see which
one is active.
"""

from __future__ import annotations


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(reduced, pivots, d)`` where ``reduced`` holds the nonzero
    rows, every pivot entry equals ``d`` and all other entries in pivot
    columns vanish, so ``reduced[i][j] / d`` is the reduced echelon form.
    """
    a = [list(r) for r in rows]
    m = len(a)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = r
        while p < m and a[p][c] == 0:
            p += 1
        if p == m:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        piv_row = a[r]
        piv = piv_row[c]
        for i in range(m):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    for j in range(ncols):
                        if row[j]:
                            row[j] = (piv * row[j]) // prev
                continue
            for j in range(ncols):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    d = prev
    # Earlier pivot rows lag one rescaling behind; bring them up to d.
    out = []
    for i in range(r):
        row = a[i]
        pv = row[pivots[i]]
        if pv != d:
            row = [(x * d) // pv for x in row]
        out.append(row)
    return out, pivots, d


def charpoly_int(mat):
    """Characteristic polynomial det(tI - A) by Berkowitz's division-free method.

    Coefficients are returned highest degree first; the result is monic.
    """
    n = len(mat)
    p = [1]
    for r in range(n):
        row_r = mat[r]
        col = [1, -row_r[r]]
        v = [mat[i][r] for i in range(r)]
        for _ in range(r):
            col.append(-sum(row_r[k] * v[k] for k in range(r)))
            v = [sum(mat[i][k] * v[k] for k in range(r)) for i in range(r)]
        lp = len(p)
        q = []
        for i in range(r + 2):
            s = 0
            for j in range(max(0, i - r - 1), min(i, lp - 1) + 1):
                s += col[i - j] * p[j]
            q.append(s)
        p = q
    return p


def matmul_int(a, b):
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = []
    for i in range(n):
        ai = a[i]
        row = [0] * m
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    row[j] += x * bt[j]
        out.append(row)
    return out
