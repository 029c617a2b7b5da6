"""Exact integer and rational linear algebra.

Matrices are lists of rows of Python ints (or Fractions for the rational
helpers).  Everything here is small-scale and exact; nothing is floating.
"""
from fractions import Fraction
from math import gcd


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(A))]


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def smith_normal_form(A):
    """Return (U, D, V) with U*A*V == D.

    U and V are unimodular, D is diagonal with nonnegative entries and
    each diagonal entry divides the next.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(r) for r in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        while True:
            # smallest nonzero entry of the remaining block becomes the pivot
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return U, D, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
                continue
            # row and column are clear; enforce divisibility of the block
            bad = next((i for i in range(t + 1, m)
                        if any(D[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, D, V


def diagonal(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_kernel(A, ncols=None):
    """Basis (as a list of vectors) of the lattice {x in Z^n : A x = 0}."""
    n = len(A[0]) if A else (ncols or 0)
    if not A:
        return identity(n)
    U, D, V = smith_normal_form(A)
    d = diagonal(D)
    r = sum(1 for x in d if x)
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def solve_integer(A, b, ncols=None):
    """One integer solution x of A x = b, or None if there is none."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    if m == 0:
        return [0] * n
    U, D, V = smith_normal_form(A)
    c = matvec(U, b)
    y = [0] * n
    for i in range(m):
        di = D[i][i] if i < n else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di:
                return None
            y[i] = c[i] // di
    return matvec(V, y)


def _augment_moduli(A, moduli, n):
    rows = []
    for i, row in enumerate(A):
        extra = [0] * len(moduli)
        extra[i] = moduli[i]
        rows.append(list(row) + extra)
    return rows


def solve_mod(A, b, moduli, ncols=None):
    """x with (A x)_i = b_i mod moduli_i (modulus 0 means exact), or None."""
    n = len(A[0]) if A else (ncols or 0)
    if not A:
        return [0] * n
    z = solve_integer(_augment_moduli(A, moduli, n), b)
    if z is None:
        return None
    return z[:n]


def hermite_rows(gens, n):
    """Row-echelon integer basis of the lattice spanned by the given rows."""
    M = [list(g) for g in gens if any(g)]
    out = []
    col = 0
    while M and col < n:
        nz = [r for r in M if r[col]]
        if not nz:
            col += 1
            continue
        while True:
            nz = [r for r in M if r[col]]
            piv = min(nz, key=lambda r: abs(r[col]))
            done = True
            for r in M:
                if r is not piv and r[col]:
                    q = r[col] // piv[col]
                    for k in range(n):
                        r[k] -= q * piv[k]
                    if r[col]:
                        done = False
            if done:
                break
        M.remove(piv)
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
        M = [r for r in M if any(r)]
        col += 1
    # reduce entries above pivots
    for i in range(len(out)):
        pc = next(k for k in range(n) if out[i][k])
        for j in range(i):
            q = out[j][pc] // out[i][pc]
            if q:
                out[j] = [a - q * b for a, b in zip(out[j], out[i])]
    return out


def kernel_mod(A, moduli, n):
    """Basis of the lattice {x in Z^n : A x = 0 mod moduli}."""
    if not A:
        return identity(n)
    K = integer_kernel(_augment_moduli(A, moduli, n))
    gens = [v[:n] for v in K]
    # the kernel always contains the moduli lattice, so it has full rank
    return hermite_rows(gens, n)


def det_int(M):
    """Determinant of a square integer matrix (fraction-free elimination)."""
    n = len(M)
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def rank_q(rows):
    """Rank over Q of a list of rational (or integer) row vectors."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return 0
    n = len(M[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def solve_q(A, b):
    """Unique rational solution of a square nonsingular system A x = b."""
    return solve_q_many(A, [b])[0]


def solve_q_many(A, bs):
    """Solutions of A x = b for every b in bs, sharing one elimination."""
    n = len(A)
    k = len(bs)
    M = [[Fraction(x) for x in row] + [Fraction(b[i]) for b in bs] for i, row in enumerate(A)]
    for c in range(n):
        piv = next(i for i in range(c, n) if M[i][c])
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [a * inv for a in M[c]]
        pr = M[c]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * bb if bb else a for a, bb in zip(M[i], pr)]
    return [[M[i][n + j] for i in range(n)] for j in range(k)]


def lcm(a, b):
    return a * b // gcd(a, b) if a and b else 0
