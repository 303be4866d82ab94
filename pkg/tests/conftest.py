"""Shared fixtures and independent oracle implementations.

The oracles here deliberately avoid the package's vectorized code paths:
naive convolution runs through FieldElement scalar arithmetic and naive
codeword enumeration folds generator rows one scalar at a time, so they give
an independent route for cross-checking results.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from duadic.algebra import AlgebraElement
from duadic.gf import field_make
from duadic.groups import Group, group_from_cayley


def frobenius21_table() -> np.ndarray:
    """Cayley table of the order-21 Frobenius group Z7 : Z3.

    Presentation a^7 = b^3 = 1, b^-1 a b = a^2; elements a^i b^j with
    id = 3*i + j; the relation gives b^j a = a^(2^j) b^j.
    """
    def eid(i: int, j: int) -> int:
        return 3 * (i % 7) + (j % 3)

    table = np.zeros((21, 21), dtype=np.int64)
    for i1 in range(7):
        for j1 in range(3):
            for i2 in range(7):
                for j2 in range(3):
                    # (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2*2^j1) b^(j1+j2)
                    table[eid(i1, j1), eid(i2, j2)] = eid(i1 + i2 * 2**j1, j1 + j2)
    return table


@pytest.fixture(scope="session")
def frobenius21() -> Group:
    return group_from_cayley(frobenius21_table(), descriptor="frobenius21")


def heisenberg27_table() -> np.ndarray:
    """Cayley table of the exponent-3 Heisenberg group of order 27.

    Triples (a, b, c) over F_3 with (a1,b1,c1)(a2,b2,c2) =
    (a1+a2, b1+b2, c1+c2+a1*b2); id = 9a + 3b + c.
    """
    def eid(a: int, b: int, c: int) -> int:
        return 9 * (a % 3) + 3 * (b % 3) + (c % 3)

    table = np.zeros((27, 27), dtype=np.int64)
    for a1 in range(3):
        for b1 in range(3):
            for c1 in range(3):
                for a2 in range(3):
                    for b2 in range(3):
                        for c2 in range(3):
                            table[eid(a1, b1, c1), eid(a2, b2, c2)] = eid(
                                a1 + a2, b1 + b2, c1 + c2 + a1 * b2
                            )
    return table


@pytest.fixture(scope="session")
def heisenberg27() -> Group:
    return group_from_cayley(heisenberg27_table(), descriptor="heisenberg27")


@pytest.fixture(scope="session")
def gf2():
    return field_make(2, 1)


@pytest.fixture(scope="session")
def gf4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return field_make(3, 2)


def naive_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution via FieldElement scalar arithmetic (independent route)."""
    field, group = a.field, a.group
    out = [field.zero] * group.order
    ca, cb = a.coeffs, b.coeffs
    for g in range(group.order):
        for h in range(group.order):
            k = group.mul(g, h)
            out[k] = out[k] + ca[g] * cb[h]
    return AlgebraElement(field, group, [c.index for c in out])


def naive_codewords(field, gen):
    """All words of the row space, folded one scalar multiply at a time."""
    gen = np.asarray(gen, dtype=np.int64)
    k, n = gen.shape
    for message in itertools.product(range(field.q), repeat=k):
        word = [0] * n
        for m_i, row in zip(message, gen):
            if m_i:
                word = [field.add(w, field.mul(m_i, int(r))) for w, r in zip(word, row)]
        yield word


def naive_min_weight(field, gen) -> int:
    best = None
    for word in naive_codewords(field, gen):
        w = sum(1 for x in word if x)
        if w and (best is None or w < best):
            best = w
    return best
