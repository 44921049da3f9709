"""Short-vector enumeration (Fincke-Pohst) for positive definite forms.

The search tree walk is the hot loop. It runs under numba when available;
set K3TOOL_NO_NUMBA=1 to use the plain numpy implementation instead. Both
return the same candidate set, which callers then verify exactly in
integer arithmetic.
"""
from __future__ import annotations

import math
import os

import numpy as np

from .forms import lll_gram, matmul

USE_NUMBA = os.environ.get("K3TOOL_NO_NUMBA", "") not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False


def fp_decompose(a: np.ndarray) -> np.ndarray:
    """Q with x^T a x = sum_i Q[i,i] (x_i + sum_{j>i} Q[i,j] x_j)^2."""
    n = a.shape[0]
    q = a.astype(np.float64).copy()
    for i in range(n):
        if q[i, i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            q[j, i] = q[i, j]
            q[i, j] = q[i, j] / q[i, i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k, l] -= q[k, i] * q[i, l]
    return np.triu(q)


def _walk(q, bound, out):
    """Fill out with all nonzero x with x^T a x <= bound. Returns the count,
    or -1 when out is too small."""
    n = q.shape[0]
    cap = out.shape[0]
    x = np.zeros(n, dtype=np.int64)
    t = np.zeros(n)
    u = np.zeros(n)
    ub = np.zeros(n, dtype=np.int64)
    eps = 1e-9 * (1.0 + bound)
    count = 0
    i = n - 1
    t[i] = bound
    u[i] = 0.0
    z = math.sqrt(max(t[i], 0.0) / q[i, i] + eps)
    ub[i] = math.floor(z - u[i])
    x[i] = math.ceil(-z - u[i]) - 1
    while True:
        x[i] += 1
        if x[i] > ub[i]:
            i += 1
            if i == n:
                return count
            continue
        if i > 0:
            s = x[i] + u[i]
            t[i - 1] = t[i] - q[i, i] * s * s
            i -= 1
            acc = 0.0
            for j in range(i + 1, n):
                acc += q[i, j] * x[j]
            u[i] = acc
            z = math.sqrt(max(t[i], 0.0) / q[i, i] + eps)
            ub[i] = math.floor(z - u[i])
            x[i] = math.ceil(-z - u[i]) - 1
        else:
            nonzero = False
            for j in range(n):
                if x[j] != 0:
                    nonzero = True
                    break
            if nonzero:
                if count >= cap:
                    return -1
                for j in range(n):
                    out[count, j] = x[j]
                count += 1


def _walk_numpy(q, bound, out):
    """Same walk with the innermost level vectorized."""
    n = q.shape[0]
    cap = out.shape[0]
    x = np.zeros(n, dtype=np.int64)
    t = np.zeros(n)
    u = np.zeros(n)
    ub = np.zeros(n, dtype=np.int64)
    eps = 1e-9 * (1.0 + bound)
    count = 0

    def level_range(i):
        z = math.sqrt(max(t[i], 0.0) / q[i, i] + eps)
        return math.ceil(-z - u[i]), math.floor(z - u[i])

    if n == 1:
        t[0] = bound
        lo, hi = level_range(0)
        vals = np.arange(lo, hi + 1)
        vals = vals[vals != 0]
        if len(vals) > cap:
            return -1
        out[: len(vals), 0] = vals
        return len(vals)
    i = n - 1
    t[i] = bound
    lo, ub[i] = level_range(i)
    x[i] = lo - 1
    while True:
        x[i] += 1
        if x[i] > ub[i]:
            i += 1
            if i == n:
                return count
            continue
        s = x[i] + u[i]
        t[i - 1] = t[i] - q[i, i] * s * s
        if i > 1:
            i -= 1
            u[i] = float(np.dot(q[i, i + 1:], x[i + 1:]))
            lo, ub[i] = level_range(i)
            x[i] = lo - 1
            continue
        # level 0: every x0 in range is a solution
        u[0] = float(np.dot(q[0, 1:], x[1:]))
        lo, hi = level_range(0)
        if hi < lo:
            continue
        vals = np.arange(lo, hi + 1)
        if not x[1:].any():
            vals = vals[vals != 0]
        k = len(vals)
        if count + k > cap:
            return -1
        out[count:count + k, 1:] = x[1:]
        out[count:count + k, 0] = vals
        count += k


if USE_NUMBA:
    _walk_fast = njit(cache=True)(_walk)
else:
    _walk_fast = _walk_numpy


def short_vectors(gram_pos, bound: float, backend: str | None = None, reduce: bool = True) -> np.ndarray:
    """All nonzero integer x with x^T gram_pos x <= bound, in the input
    coordinates. ``backend`` is "numba", "numpy" or None (environment
    default)."""
    g = [list(map(int, row)) for row in gram_pos]
    n = len(g)
    if reduce and n > 1:
        tmat, g_red = lll_gram(g)
    else:
        tmat, g_red = None, g
    q = fp_decompose(np.array(g_red, dtype=np.float64))
    walk = {"numba": _walk_fast if USE_NUMBA else _walk, "numpy": _walk_numpy, "python": _walk}.get(
        backend or ("numba" if USE_NUMBA else "numpy")
    )
    if walk is None:
        raise ValueError(f"unknown backend {backend!r}")
    cap = 1024
    while True:
        out = np.zeros((cap, n), dtype=np.int64)
        cnt = walk(q, float(bound), out)
        if cnt >= 0:
            break
        cap *= 4
    vecs = out[:cnt]
    if tmat is not None:
        vecs = vecs.dot(np.array(tmat, dtype=np.int64))
    return vecs


def vectors_of_norm(gram_pos, norm: int, backend: str | None = None) -> list[tuple[int, ...]]:
    """Exactly the vectors with x^T gram_pos x == norm (verified in integer
    arithmetic)."""
    cands = short_vectors(gram_pos, norm, backend)
    out = []
    for v in cands:
        w = [int(c) for c in v]
        val = sum(w[i] * sum(gram_pos[i][j] * w[j] for j in range(len(w))) for i in range(len(w)))
        if val == norm:
            out.append(tuple(w))
    return sorted(set(out))


__all__ = ["USE_NUMBA", "fp_decompose", "short_vectors", "vectors_of_norm", "matmul"]
