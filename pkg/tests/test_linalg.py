"""Exact linear algebra over small fields."""

from __future__ import annotations

import random

import numpy as np
import pytest

from duadic import _linalg
from duadic.gf import field_from_order

FIELDS = [2, 3, 4, 5, 9]


def random_matrix(field, rows, cols, seed):
    rng = random.Random(seed)
    return np.array([[rng.randrange(field.q) for _ in range(cols)] for _ in range(rows)], dtype=np.int64)


@pytest.mark.parametrize("q", FIELDS)
def test_rref_is_canonical_under_row_operations(q):
    field = field_from_order(q)
    rng = random.Random(q * 11)
    for seed in range(5):
        m = random_matrix(field, 5, 8, seed * 31 + q)
        red, pivots = _linalg.rref(field, m)
        # shuffle rows and rescale: same row space, same rref
        rows = [field.vmul(np.int64(rng.randrange(1, field.q)), r) for r in m]
        rng.shuffle(rows)
        red2, pivots2 = _linalg.rref(field, np.array(rows))
        assert pivots == pivots2
        assert np.array_equal(red, red2)
        # every pivot entry 1, eliminated above and below
        for i, c in enumerate(pivots):
            col = red[:, c]
            assert col[i] == 1 and np.count_nonzero(col) == 1


@pytest.mark.parametrize("q", FIELDS)
def test_right_kernel_annihilates(q):
    field = field_from_order(q)
    for seed in range(4):
        m = random_matrix(field, 4, 9, seed + q * 7)
        kern = _linalg.right_kernel(field, m)
        assert kern.shape[0] == 9 - _linalg.rank(field, m)
        if kern.size:
            prod = _linalg.matmul(field, m, kern.T)
            assert not np.any(prod)


@pytest.mark.parametrize("q", FIELDS)
def test_matmul_against_naive(q):
    field = field_from_order(q)
    a = random_matrix(field, 4, 6, q)
    b = random_matrix(field, 6, 5, q + 1)
    fast = _linalg.matmul(field, a, b)
    for i in range(4):
        for j in range(5):
            acc = 0
            for k in range(6):
                acc = field.add(acc, field.mul(int(a[i, k]), int(b[k, j])))
            assert acc == fast[i, j]


@pytest.mark.parametrize("q", FIELDS)
def test_solve_in_span(q):
    field = field_from_order(q)
    rng = random.Random(q * 5)
    basis = random_matrix(field, 3, 7, q * 13)
    coeffs = np.array([rng.randrange(field.q) for _ in range(3)], dtype=np.int64)
    v = np.zeros(7, dtype=np.int64)
    for c, row in zip(coeffs, basis):
        v = field.vadd(v, field.vmul(np.int64(int(c)), row))
    x = _linalg.solve_in_span(field, basis, v)
    assert x is not None
    recon = np.zeros(7, dtype=np.int64)
    for c, row in zip(x, basis):
        recon = field.vadd(recon, field.vmul(np.int64(int(c)), row))
    assert np.array_equal(recon, v)


def test_solve_in_span_outside():
    field = field_from_order(2)
    basis = np.array([[1, 0, 0], [0, 1, 0]], dtype=np.int64)
    assert _linalg.solve_in_span(field, basis, np.array([0, 0, 1])) is None


def test_row_space_equal():
    field = field_from_order(3)
    a = np.array([[1, 2, 0], [0, 1, 1]], dtype=np.int64)
    b = np.array([[1, 0, 1], [0, 2, 2]], dtype=np.int64)  # row ops of a
    c = np.array([[1, 0, 0], [0, 1, 0]], dtype=np.int64)
    assert _linalg.row_space_equal(field, a, b)
    assert not _linalg.row_space_equal(field, a, c)
