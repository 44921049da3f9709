import numpy as np
import pytest
from hypothesis import given, strategies as st

from k3tool.lattice.forms import (
    det,
    hnf,
    hnf_with_transform,
    invariant_factors,
    left_kernel,
    lll_gram,
    matmul,
    rank,
    right_kernel,
    signature,
    snf_with_transform,
    transpose,
)

small = st.integers(-6, 6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(matrices(4, 4))
def test_det_matches_numpy(m):
    assert det(m) == round(np.linalg.det(np.array(m, dtype=float)))


@given(matrices(3, 5))
def test_hnf_transform(m):
    h, t = hnf_with_transform(m)
    assert matmul(t, m) == h
    assert abs(det(t)) == 1
    assert rank(m) == rank(h)


@given(matrices(3, 3))
def test_snf(m):
    u, d, v = snf_with_transform(m)
    assert matmul(matmul(u, m), v) == d
    diag = [d[i][i] for i in range(3)]
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    prod = 1
    for x in diag:
        prod *= x
    assert abs(prod) == abs(det(m))


@given(matrices(3, 5))
def test_kernels(m):
    for k in right_kernel(m):
        assert all(sum(r[j] * k[j] for j in range(5)) == 0 for r in m)
    assert len(right_kernel(m)) == 5 - rank(m)
    mt = transpose(m)
    for k in left_kernel(mt):
        assert all(sum(k[i] * mt[i][j] for i in range(5)) == 0 for j in range(3))


def test_invariant_factors_frozen():
    assert invariant_factors([[2, 0], [0, 6]]) == [2, 6]
    assert invariant_factors([[2, 4], [6, 8]]) == [2, 4]
    assert hnf([[2, 4], [6, 8]]) == hnf([[6, 8], [2, 4]])


def test_signature():
    assert signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature([[-2, 1], [1, -2]]) == (0, 2, 0)
    assert signature([[1, 1], [1, 1]]) == (1, 0, 1)


@given(matrices(4, 4))
def test_lll_preserves_lattice(m):
    b = np.array(m, dtype=np.int64)
    if round(np.linalg.det(b.astype(float))) == 0:
        return
    g = (b @ b.T).tolist()
    t, red = lll_gram(g)
    assert abs(det(t)) == 1
    assert matmul(matmul(t, g), transpose(t)) == red
    assert det(red) == det(g)


def test_lll_rejects_nothing_on_identity():
    t, red = lll_gram([[1, 0], [0, 1]])
    assert red == [[1, 0], [0, 1]]
