"""Exact integer matrix algebra: HNF, determinants, Gram matrices, LLL.

Matrices are dense, row-major ``list[list[int]]`` with arbitrary-precision
Python integers.  Nothing in this module rounds: every result is exact, so
outputs are safe to embed in certificates.  Dimensions stay small (<= 48),
which keeps the fraction-free algorithms cheap.
"""

from __future__ import annotations

Matrix = list[list[int]]
Vector = list[int]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(m: Matrix) -> Matrix:
    return [row[:] for row in m]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def dot(u: Vector, v: Vector) -> int:
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    return sum(a * b for a, b in zip(u, v))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b or len(a[0]) != len(b):
        raise ValueError("dimension mismatch in matmul")
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return [dot(row, v) for row in m]


def scalar_mul(c: int, m: Matrix) -> Matrix:
    return [[c * x for x in row] for row in m]


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i)
    )


def hnf(m: Matrix) -> tuple[Matrix, int]:
    """Row-style Hermite normal form of the row span of ``m``.

    Returns ``(H, rank)`` where ``H`` holds the ``rank`` nonzero rows.
    Pivots are positive; entries above each pivot are reduced into
    ``[0, pivot)``.  The row span over Z is preserved, so ``H`` is a
    canonical representative usable for lattice-equality tests.
    """
    if not m:
        return [], 0
    a = copy_matrix(m)
    rows, cols = len(a), len(a[0])
    r = 0
    for j in range(cols):
        # Clear column j below row r by Euclidean row operations.
        while True:
            nz = [i for i in range(r, rows) if a[i][j] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][j]))
            a[r], a[piv] = a[piv], a[r]
            if a[r][j] < 0:
                a[r] = [-x for x in a[r]]
            done = True
            for i in range(r + 1, rows):
                if a[i][j] != 0:
                    q = a[i][j] // a[r][j]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][j] != 0:
                        done = False
            if done:
                break
        if r < rows and a[r][j] != 0:
            for i in range(r):
                q = a[i][j] // a[r][j]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == rows:
                break
    return a[:r], r


def det(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def gram(b: Matrix, scale: int) -> Matrix:
    """Return (B * B^T) / scale exactly.

    Raises if some entry of B*B^T is not divisible by ``scale``; for bases of
    ``rho(C) + k Z^n`` this signals that C is not self-orthogonal.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    g = [[dot(u, v) for v in b] for u in b]
    for i, row in enumerate(g):
        for j, x in enumerate(row):
            q, rem = divmod(x, scale)
            if rem:
                raise ValueError(
                    f"Gram entry ({i},{j}) = {x} not divisible by scale {scale}"
                )
            row[j] = q
    return g


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division in integral LLL bookkeeping")
    return q


def _nearest_int(a: int, b: int) -> int:
    # round(a / b) for b > 0, exact in integers
    return (2 * a + b) // (2 * b)


def lll_gram(g0: Matrix, delta_num: int = 3, delta_den: int = 4) -> tuple[Matrix, Matrix]:
    """Integral LLL on a positive-definite Gram matrix.

    Returns ``(G', U)`` with ``G' = U * G * U^T`` and ``U`` unimodular, where
    the (implicit) basis rows are LLL-reduced with parameter delta = 3/4.
    This is the classic all-integer formulation: the rational Gram-Schmidt
    data mu_{i,j} = lam[i][j] / d_j is tracked with cleared denominators, so
    every step is exact.  Raises ValueError on rank-deficient input.
    """
    n = len(g0)
    g = copy_matrix(g0)
    u = identity(n)
    if n <= 1:
        if n == 1 and g[0][0] <= 0:
            raise ValueError("rank-deficient input to LLL")
        return g, u

    d = [1] * (n + 1)  # d[i+1] = Gram determinant of rows 0..i
    lam = [[0] * n for _ in range(n)]
    if g[0][0] <= 0:
        raise ValueError("rank-deficient input to LLL")
    d[1] = g[0][0]
    kmax = 0

    def row_op(k: int, l: int, q: int) -> None:
        # b_k <- b_k - q * b_l, applied to U and to the Gram matrix
        if q == 0:
            return
        u[k] = [x - q * y for x, y in zip(u[k], u[l])]
        gk, gl = g[k], g[l]
        for j in range(n):
            gk[j] -= q * gl[j]
        for i in range(n):
            g[i][k] -= q * g[i][l]

    def red(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = _nearest_int(lam[k][l], d[l + 1])
            row_op(k, l, q)
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k: int) -> None:
        u[k], u[k - 1] = u[k - 1], u[k]
        g[k], g[k - 1] = g[k - 1], g[k]
        for i in range(n):
            g[i][k], g[i][k - 1] = g[i][k - 1], g[i][k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lmb = lam[k][k - 1]
        b = _exact_div(d[k - 1] * d[k + 1] + lmb * lmb, d[k])
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = _exact_div(d[k + 1] * lam[i][k - 1] - lmb * t, d[k])
            lam[i][k - 1] = _exact_div(b * t + lmb * lam[i][k], d[k + 1])
        d[k] = b

    k = 1
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                val = g[k][j]
                for i in range(j):
                    val = _exact_div(d[i + 1] * val - lam[k][i] * lam[j][i], d[i])
                if j < k:
                    lam[k][j] = val
                else:
                    if val <= 0:
                        raise ValueError("rank-deficient input to LLL")
                    d[k + 1] = val
        red(k, k - 1)
        if delta_den * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < delta_num * d[k] * d[k]:
            swap(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return g, u


def lll_reduce(b: Matrix) -> tuple[Matrix, Matrix]:
    """LLL-reduce the rows of ``b`` (full row rank) with delta = 3/4.

    Returns ``(B', U)`` with ``B' = U * B``, ``U`` unimodular, and the row
    span unchanged.
    """
    g = [[dot(x, y) for y in b] for x in b]
    _, u = lll_gram(g)
    return matmul(u, b), u
