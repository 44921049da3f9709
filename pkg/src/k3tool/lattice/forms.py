"""Exact integer linear algebra for quadratic forms: determinants, Hermite
and Smith normal forms with transforms, integer kernels, signatures, and an
LLL reduction used to precondition enumeration.

Matrices are lists of lists of Python ints unless stated otherwise.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def as_int_matrix(m) -> list[list[int]]:
    return [[int(v) for v in row] for row in m]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def gram_of(basis, gram):
    """basis * gram * basis^T."""
    return matmul(matmul(basis, gram), transpose(basis))


def det(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hnf_with_transform(a):
    """Row-style Hermite normal form: returns (H, T) with T unimodular and
    T a = H. Zero rows of H come last; the matching rows of T span the
    left kernel of a."""
    h = as_int_matrix(a)
    m = len(h)
    n = len(h[0]) if m else 0
    t = identity(m)
    piv = 0
    for col in range(n):
        if piv == m:
            break
        while True:
            rows = [r for r in range(piv, m) if h[r][col] != 0]
            if not rows:
                break
            best = min(rows, key=lambda r: abs(h[r][col]))
            if best != piv:
                h[piv], h[best] = h[best], h[piv]
                t[piv], t[best] = t[best], t[piv]
            done = True
            for r in range(piv + 1, m):
                if h[r][col]:
                    q = h[r][col] // h[piv][col]
                    h[r] = [x - q * y for x, y in zip(h[r], h[piv])]
                    t[r] = [x - q * y for x, y in zip(t[r], t[piv])]
                    if h[r][col]:
                        done = False
            if done:
                break
        if all(h[r][col] == 0 for r in range(piv, m)):
            continue
        if h[piv][col] < 0:
            h[piv] = [-x for x in h[piv]]
            t[piv] = [-x for x in t[piv]]
        for r in range(piv):
            q = h[r][col] // h[piv][col]
            if q:
                h[r] = [x - q * y for x, y in zip(h[r], h[piv])]
                t[r] = [x - q * y for x, y in zip(t[r], t[piv])]
        piv += 1
    return h, t


def hnf(a):
    h, _ = hnf_with_transform(a)
    return [row for row in h if any(row)]


def rank(a) -> int:
    return len(hnf(a))


def left_kernel(a):
    """Basis of {x in Z^m : x a = 0}; always a saturated sublattice."""
    h, t = hnf_with_transform(a)
    return [t[i] for i, row in enumerate(h) if not any(row)]


def right_kernel(a):
    """Basis of {x in Z^n : a x = 0}."""
    return left_kernel(transpose(a))


def snf_with_transform(a):
    """Smith normal form: returns (U, D, V) with U a V = D diagonal,
    d1 | d2 | ..., U and V unimodular."""
    d = as_int_matrix(a)
    m = len(d)
    n = len(d[0]) if m else 0
    u, v = identity(m), identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst -= q * row src
        d[dst] = [x - q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):  # col dst -= q * col src
        for row in d:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = d[t][t]
            clean = True
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(t, i, d[i][t] // p)
                    clean = clean and d[i][t] == 0
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(t, j, d[t][j] // p)
                    clean = clean and d[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, -1)
        if t < m and t < n and d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v


def invariant_factors(a) -> list[int]:
    _, d, _ = snf_with_transform(a)
    return [abs(d[i][i]) for i in range(min(len(d), len(d[0]) if d else 0))]


def signature(gram) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia by exact symmetric elimination."""
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                return pos, neg, n + 0
            i, j = pair
            # congruence: row/col i += row/col j makes a[i][i] = 2 a[i][j]
            a[i] = [x + y for x, y in zip(a[i], a[j])]
            for row in a:
                row[i] += row[j]
            k = i
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in range(n) if i != k]
        a = [[a[i][j] - a[i][k] * a[k][j] / p for j in rest] for i in rest]
    return pos, neg, 0


def is_even(gram) -> bool:
    return all(gram[i][i] % 2 == 0 for i in range(len(gram)))


def is_symmetric(gram) -> bool:
    n = len(gram)
    return all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n))


def lll_gram(gram, delta: float = 0.99):
    """LLL on a positive definite Gram matrix. Returns (T, reduced) with
    T unimodular (rows are the new basis in old coordinates) and
    reduced = T gram T^T computed exactly. Gram-Schmidt data are floats;
    only the integer transform matters for correctness."""
    n = len(gram)
    g = np.array(gram, dtype=np.int64).astype(object)
    t = np.array(identity(n), dtype=object)

    def current():
        return (t.dot(g).dot(t.T)).astype(float)

    k = 1
    gf = current()
    while k < n:
        mu, bstar = _gram_schmidt(gf)
        for j in range(k - 1, -1, -1):
            q = int(round(mu[k, j]))
            if q:
                t[k] = t[k] - q * t[j]
                gf = current()
                mu, bstar = _gram_schmidt(gf)
        if bstar[k] >= (delta - mu[k, k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            t[[k - 1, k]] = t[[k, k - 1]]
            gf = current()
            k = max(k - 1, 1)
    tl = [[int(x) for x in row] for row in t]
    return tl, gram_of(tl, as_int_matrix(gram))


def _gram_schmidt(gf):
    n = gf.shape[0]
    mu = np.zeros((n, n))
    bstar = np.zeros(n)
    for i in range(n):
        for j in range(i):
            mu[i, j] = (gf[i, j] - sum(mu[j, k] * mu[i, k] * bstar[k] for k in range(j))) / bstar[j]
        bstar[i] = gf[i, i] - sum(mu[i, k] ** 2 * bstar[k] for k in range(i))
    return mu, bstar
