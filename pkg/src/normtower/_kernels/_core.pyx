#cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled F_p matrix kernels. Same contract as _core_py."""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

BACKEND = "c"


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef long long* _from_list(object data, Py_ssize_t size) except NULL:
    cdef long long* buf = <long long*> malloc(size * sizeof(long long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = data[i]
    return buf


cdef list _to_list(long long* buf, Py_ssize_t size):
    cdef list out = [0] * size
    cdef Py_ssize_t i
    for i in range(size):
        out[i] = buf[i]
    return out


def mat_mul(a, b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m, long long p):
    """(n x k) times (k x m) over F_p, flat row-major."""
    cdef long long* A = _from_list(a, n * k)
    cdef long long* B = _from_list(b, k * m)
    cdef long long* C = <long long*> malloc(n * m * sizeof(long long))
    cdef Py_ssize_t i, j, t
    cdef long long c
    if C == NULL:
        free(A)
        free(B)
        raise MemoryError()
    memset(C, 0, n * m * sizeof(long long))
    for i in range(n):
        for t in range(k):
            c = A[i * k + t]
            if c == 0:
                continue
            for j in range(m):
                C[i * m + j] = (C[i * m + j] + c * B[t * m + j]) % p
    out = _to_list(C, n * m)
    free(A)
    free(B)
    free(C)
    return out


def rref(mat, Py_ssize_t rows, Py_ssize_t cols, long long p):
    """Reduced row echelon form. Returns (flat matrix, rank, pivot columns)."""
    cdef long long* M = _from_list(mat, rows * cols)
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long inv, f, tmp
    pivots = []
    for c in range(cols):
        pr = -1
        for i in range(r, rows):
            if M[i * cols + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(cols):
                tmp = M[r * cols + j]
                M[r * cols + j] = M[pr * cols + j]
                M[pr * cols + j] = tmp
        inv = _inv_mod(M[r * cols + c], p)
        for j in range(c, cols):
            M[r * cols + j] = M[r * cols + j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = M[i * cols + c]
            if f != 0:
                for j in range(c, cols):
                    M[i * cols + j] = (M[i * cols + j] - f * M[r * cols + j]) % p
                    if M[i * cols + j] < 0:
                        M[i * cols + j] += p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    out = _to_list(M, rows * cols)
    free(M)
    return out, r, tuple(pivots)


def rank(mat, Py_ssize_t rows, Py_ssize_t cols, long long p):
    """Rank via forward elimination only."""
    cdef long long* M = _from_list(mat, rows * cols)
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long inv, f, tmp
    for c in range(cols):
        pr = -1
        for i in range(r, rows):
            if M[i * cols + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                tmp = M[r * cols + j]
                M[r * cols + j] = M[pr * cols + j]
                M[pr * cols + j] = tmp
        inv = _inv_mod(M[r * cols + c], p)
        for i in range(r + 1, rows):
            f = M[i * cols + c] * inv % p
            if f != 0:
                for j in range(c, cols):
                    M[i * cols + j] = (M[i * cols + j] - f * M[r * cols + j]) % p
                    if M[i * cols + j] < 0:
                        M[i * cols + j] += p
        r += 1
        if r == rows:
            break
    free(M)
    return r


cdef Py_ssize_t _echelonize(long long* vecs, Py_ssize_t count, long long* out,
                            Py_ssize_t* pivrow, Py_ssize_t n, long long p):
    # Column echelonization; returns number of independent vectors written
    # to out (each length n), in ascending pivot-row order.
    cdef Py_ssize_t kept = 0, v, i, piv, slot
    cdef long long c, inv
    cdef long long* tmp = <long long*> malloc(n * sizeof(long long))
    cdef Py_ssize_t* at = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if tmp == NULL or at == NULL:
        free(tmp)
        free(at)
        raise MemoryError()
    for i in range(n):
        at[i] = -1
    for v in range(count):
        memcpy(tmp, vecs + v * n, n * sizeof(long long))
        while True:
            piv = -1
            for i in range(n):
                if tmp[i] != 0:
                    piv = i
                    break
            if piv < 0:
                break
            if at[piv] >= 0:
                slot = at[piv]
                c = tmp[piv]
                for i in range(piv, n):
                    tmp[i] = (tmp[i] - c * out[slot * n + i]) % p
                    if tmp[i] < 0:
                        tmp[i] += p
            else:
                inv = _inv_mod(tmp[piv], p)
                for i in range(n):
                    out[kept * n + i] = tmp[i] * inv % p
                at[piv] = kept
                kept += 1
                break
    # reorder by pivot row
    slot = 0
    for i in range(n):
        if at[i] >= 0:
            pivrow[slot] = at[i]
            slot += 1
    free(tmp)
    free(at)
    return kept


def nilpotent_rank_sequence(mat, Py_ssize_t n, long long p):
    """[rank(N^0), rank(N^1), ...] down to 0 for a nilpotent n x n matrix N."""
    cdef long long* N = _from_list(mat, n * n)
    cdef long long* cur = <long long*> malloc(n * n * sizeof(long long))
    cdef long long* red = <long long*> malloc(n * n * sizeof(long long))
    cdef Py_ssize_t* order = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t count = n, prev = n, r, v, i, j
    cdef long long c, s
    if cur == NULL or red == NULL or order == NULL:
        free(N); free(cur); free(red); free(order)
        raise MemoryError()
    ranks = [n]
    # columns of N as the starting image basis candidates
    for j in range(n):
        for i in range(n):
            cur[j * n + i] = N[i * n + j]
    try:
        while True:
            r = _echelonize(cur, count, red, order, n, p)
            ranks.append(r)
            if r == 0:
                return ranks
            if r >= prev:
                raise ValueError("matrix is not nilpotent")
            prev = r
            # next candidates: N applied to each basis vector, pivot order
            for v in range(r):
                j = order[v]
                for i in range(n):
                    s = 0
                    for c in range(n):
                        if red[j * n + c] != 0:
                            s += N[i * n + c] * red[j * n + c]
                    cur[v * n + i] = s % p
            count = r
    finally:
        free(N); free(cur); free(red); free(order)
