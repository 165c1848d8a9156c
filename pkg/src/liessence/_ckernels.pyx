# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Each routine first tries a machine-word path with overflow checking and
falls back to arbitrary-precision Python ints when any intermediate
value leaves int64.
"""

cimport cython
from libc.stdlib cimport malloc, free

ctypedef long long i64


@cython.overflowcheck(True)
cdef Py_ssize_t _rref_c(i64* a, Py_ssize_t m, Py_ssize_t n,
                        Py_ssize_t* pivots, i64* dout) except -1:
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef i64 prev = 1, piv, f, tmp
    for c in range(n):
        if r == m:
            break
        p = r
        while p < m and a[p * n + c] == 0:
            p += 1
        if p == m:
            continue
        if p != r:
            for j in range(n):
                tmp = a[p * n + j]
                a[p * n + j] = a[r * n + j]
                a[r * n + j] = tmp
        piv = a[r * n + c]
        for i in range(m):
            if i == r:
                continue
            f = a[i * n + c]
            if f == 0:
                if piv != prev:
                    for j in range(n):
                        if a[i * n + j] != 0:
                            a[i * n + j] = (piv * a[i * n + j]) / prev
                continue
            for j in range(n):
                a[i * n + j] = (piv * a[i * n + j] - f * a[r * n + j]) / prev
        prev = piv
        pivots[r] = c
        r += 1
    dout[0] = prev
    return r


cdef tuple _rref_obj(list rows, Py_ssize_t ncols):
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t m = len(a), r = 0, c, p, i, j
    cdef list pivots = []
    cdef list row, piv_row
    cdef object prev = 1, piv, f
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
    return [a[i] for i in range(r)], pivots, prev


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan; see ``_pykernels.rref_int``."""
    cdef Py_ssize_t m = len(rows), n = ncols, i, j, r
    cdef i64* buf
    cdef Py_ssize_t* piv
    cdef i64 d = 1
    if m == 0 or n == 0:
        return [], [], 1
    buf = <i64*> malloc(m * n * sizeof(i64))
    piv = <Py_ssize_t*> malloc(min(m, n) * sizeof(Py_ssize_t))
    if buf == NULL or piv == NULL:
        free(buf)
        free(piv)
        raise MemoryError()
    try:
        try:
            for i in range(m):
                row = rows[i]
                for j in range(n):
                    buf[i * n + j] = row[j]
            r = _rref_c(buf, m, n, piv, &d)
        except OverflowError:
            return _rref_obj(list(rows), ncols)
        return ([[buf[i * n + j] for j in range(n)] for i in range(r)],
                [piv[i] for i in range(r)], d)
    finally:
        free(buf)
        free(piv)


@cython.overflowcheck(True)
cdef int _charpoly_c(i64* a, Py_ssize_t n, i64* p, i64* q, i64* col,
                     i64* v, i64* w) except -1:
    cdef Py_ssize_t r, i, j, k, lp, lo, hi
    cdef i64 s
    p[0] = 1
    lp = 1
    for r in range(n):
        col[0] = 1
        col[1] = -a[r * n + r]
        for i in range(r):
            v[i] = a[i * n + r]
        for k in range(r):
            s = 0
            for i in range(r):
                s += a[r * n + i] * v[i]
            col[k + 2] = -s
            for i in range(r):
                s = 0
                for j in range(r):
                    s += a[i * n + j] * v[j]
                w[i] = s
            for i in range(r):
                v[i] = w[i]
        for i in range(r + 2):
            s = 0
            lo = i - r - 1
            if lo < 0:
                lo = 0
            hi = i if i < lp - 1 else lp - 1
            for j in range(lo, hi + 1):
                s += col[i - j] * p[j]
            q[i] = s
        lp = r + 2
        for i in range(lp):
            p[i] = q[i]
    return 0


cdef list _charpoly_obj(list mat):
    cdef Py_ssize_t n = len(mat), r, i, j, k, lp
    cdef list p = [1], q, col, v, row_r
    for r in range(n):
        row_r = mat[r]
        col = [1, -row_r[r]]
        v = [mat[i][r] for i in range(r)]
        for k in range(r):
            col.append(-sum([row_r[i] * v[i] for i in range(r)]))
            v = [sum([mat[i][j] * v[j] for j in range(r)]) for i in range(r)]
        lp = len(p)
        q = []
        for i in range(r + 2):
            s = 0
            for j in range(max(0, i - r - 1), min(i, lp - 1) + 1):
                s += col[i - j] * p[j]
            q.append(s)
        p = q
    return p


def charpoly_int(mat):
    """Berkowitz characteristic polynomial, highest degree first."""
    cdef Py_ssize_t n = len(mat), i, j
    cdef i64* a
    cdef i64* work
    if n == 0:
        return [1]
    a = <i64*> malloc(n * n * sizeof(i64))
    work = <i64*> malloc((4 * (n + 2) + n) * sizeof(i64))
    if a == NULL or work == NULL:
        free(a)
        free(work)
        raise MemoryError()
    try:
        try:
            for i in range(n):
                row = mat[i]
                for j in range(n):
                    a[i * n + j] = row[j]
            _charpoly_c(a, n, work, work + (n + 2), work + 2 * (n + 2),
                        work + 3 * (n + 2), work + 4 * (n + 2))
        except OverflowError:
            return _charpoly_obj([list(r) for r in mat])
        return [work[i] for i in range(n + 1)]
    finally:
        free(a)
        free(work)


@cython.overflowcheck(True)
cdef int _matmul_c(i64* a, i64* b, i64* c, Py_ssize_t n, Py_ssize_t k,
                   Py_ssize_t m) except -1:
    cdef Py_ssize_t i, j, t
    cdef i64 x
    for i in range(n * m):
        c[i] = 0
    for i in range(n):
        for t in range(k):
            x = a[i * k + t]
            if x != 0:
                for j in range(m):
                    c[i * m + j] += x * b[t * m + j]
    return 0


def matmul_int(a, b):
    cdef Py_ssize_t n = len(a), k = len(b), m, i, j
    cdef i64* buf
    m = len(b[0]) if k else 0
    if n == 0 or k == 0 or m == 0:
        return [[0] * m for _ in range(n)]
    buf = <i64*> malloc((n * k + k * m + n * m) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    try:
        try:
            for i in range(n):
                for j in range(k):
                    buf[i * k + j] = a[i][j]
            for i in range(k):
                for j in range(m):
                    buf[n * k + i * m + j] = b[i][j]
            _matmul_c(buf, buf + n * k, buf + n * k + k * m, n, k, m)
        except OverflowError:
            out = []
            for i in range(n):
                ai = a[i]
                out.append([sum([ai[t] * b[t][j] for t in range(k)])
                            for j in range(m)])
            return out
        return [[buf[n * k + k * m + i * m + j] for j in range(m)]
                for i in range(n)]
    finally:
        free(buf)
