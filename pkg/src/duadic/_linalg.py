"""Exact linear algebra over a FiniteField on numpy index matrices.

Matrices are 2-D int64 arrays of field-element indexes.  Everything here is
deterministic: leftmost-pivot RREF with monic pivots, eliminating above and
below, which makes the reduced form canonical (two row spaces are equal iff
their RREFs are equal).
"""

from __future__ import annotations

import numpy as np

from .gf import FiniteField


def as_matrix(rows) -> np.ndarray:
    arr = np.asarray(rows, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return arr


def rref(field: FiniteField, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns."""
    m = as_matrix(mat).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        pv = int(m[r, c])
        if pv != 1:
            m[r] = field.vmul(m[r], field.inv(pv))
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = m[others, c].reshape(-1, 1)
            m[others] = field.vsub(m[others], field.vmul(factors, m[r].reshape(1, -1)))
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def rank(field: FiniteField, mat: np.ndarray) -> int:
    return rref(field, mat)[0].shape[0]


def row_reduce_vector(field: FiniteField, red: np.ndarray, pivots: list[int], v: np.ndarray) -> np.ndarray:
    """Residue of v after elimination against an RREF basis."""
    w = v.astype(np.int64).copy()
    for j, c in enumerate(pivots):
        if w[c] != 0:
            w = field.vsub(w, field.vmul(np.int64(w[c]), red[j]))
    return w


def in_row_space(field: FiniteField, red: np.ndarray, pivots: list[int], v: np.ndarray) -> bool:
    return not np.any(row_reduce_vector(field, red, pivots, v))


def row_space_equal(field: FiniteField, a: np.ndarray, b: np.ndarray) -> bool:
    ra, _ = rref(field, a)
    rb, _ = rref(field, b)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def right_kernel(field: FiniteField, mat: np.ndarray) -> np.ndarray:
    """Rows spanning {v : mat @ v = 0}, in RREF."""
    red, pivots = rref(field, mat)
    cols = as_matrix(mat).shape[1]
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for j, pc in enumerate(pivots):
            basis[i, pc] = field.neg(int(red[j, fc]))
    return rref(field, basis)[0]


def matmul(field: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product over the field."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    if field.m == 1:
        return (a @ b) % field.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        col = a[:, k]
        if not np.any(col):
            continue
        out = field.vadd(out, field.vmul(col.reshape(-1, 1), b[k].reshape(1, -1)))
    return out


def solve_in_span(field: FiniteField, basis: np.ndarray, v: np.ndarray) -> np.ndarray | None:
    """Coefficients x with x @ basis = v, or None if v is outside the span."""
    basis = as_matrix(basis)
    k, n = basis.shape
    aug = np.hstack([basis, np.eye(k, dtype=np.int64)])
    red, pivots = rref(field, aug)
    w = np.concatenate([v.astype(np.int64), np.zeros(k, dtype=np.int64)])
    for j, c in enumerate(pivots):
        if c < n and w[c] != 0:
            w = field.vsub(w, field.vmul(np.int64(w[c]), red[j]))
    if np.any(w[:n]):
        return None
    return field.vneg(w[n:])
