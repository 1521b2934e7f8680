"""Pure-Python F_p matrix kernels.

Flat row-major lists of ints in [0, p). Same signatures as the compiled
module; _kernels/__init__ picks whichever is available.
"""

BACKEND = "python"


def mat_mul(a, b, n, k, m, p):
    """(n x k) times (k x m) over F_p, flat row-major."""
    out = [0] * (n * m)
    for i in range(n):
        arow = a[i * k : (i + 1) * k]
        orow = i * m
        for t in range(k):
            c = arow[t]
            if c == 0:
                continue
            brow = t * m
            for j in range(m):
                out[orow + j] = (out[orow + j] + c * b[brow + j]) % p
    return out


def rref(mat, rows, cols, p):
    """Reduced row echelon form. Returns (flat matrix, rank, pivot columns)."""
    m = list(mat)
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i * cols + c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            for j in range(cols):
                m[r * cols + j], m[pr * cols + j] = m[pr * cols + j], m[r * cols + j]
        inv = pow(m[r * cols + c], -1, p)
        for j in range(c, cols):
            m[r * cols + j] = m[r * cols + j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = m[i * cols + c]
            if f:
                for j in range(c, cols):
                    m[i * cols + j] = (m[i * cols + j] - f * m[r * cols + j]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, r, tuple(pivots)


def rank(mat, rows, cols, p):
    """Rank via forward elimination only."""
    m = list(mat)
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i * cols + c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            for j in range(c, cols):
                m[r * cols + j], m[pr * cols + j] = m[pr * cols + j], m[r * cols + j]
        inv = pow(m[r * cols + c], -1, p)
        for i in range(r + 1, rows):
            f = m[i * cols + c]
            if f:
                f = f * inv % p
                for j in range(c, cols):
                    m[i * cols + j] = (m[i * cols + j] - f * m[r * cols + j]) % p
        r += 1
        if r == rows:
            break
    return r


def nilpotent_rank_sequence(mat, n, p):
    """[rank(N^0), rank(N^1), ...] down to 0 for a nilpotent n x n matrix N.

    Iterates an echelonized basis of the image instead of forming powers:
    the k-th step multiplies N into a basis of im(N^(k-1)) and re-reduces,
    so the cost is governed by the (shrinking) ranks, not by n^3 per power.
    Raises ValueError if N is not nilpotent.
    """
    ranks = [n]
    basis = [[mat[i * n + j] for i in range(n)] for j in range(n)]  # columns of N
    while True:
        basis = _echelonize_columns(basis, n, p)
        r = len(basis)
        ranks.append(r)
        if r == 0:
            return ranks
        if r >= ranks[-2]:
            raise ValueError("matrix is not nilpotent")
        basis = [_apply(mat, v, n, p) for v in basis]


def _apply(mat, v, n, p):
    out = [0] * n
    for i in range(n):
        row = mat[i * n : (i + 1) * n]
        s = 0
        for j in range(n):
            c = v[j]
            if c:
                s += row[j] * c
        out[i] = s % p
    return out


def _echelonize_columns(vectors, n, p):
    basis = {}
    for v in vectors:
        v = list(v)
        while True:
            piv = -1
            for i in range(n):
                if v[i]:
                    piv = i
                    break
            if piv < 0:
                break
            if piv in basis:
                c = v[piv]
                w = basis[piv]
                for i in range(piv, n):
                    v[i] = (v[i] - c * w[i]) % p
            else:
                inv = pow(v[piv], -1, p)
                basis[piv] = [x * inv % p for x in v]
                break
    return [basis[k] for k in sorted(basis)]
