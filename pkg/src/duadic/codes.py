"""Linear codes over F_q as canonical row spaces: ideal-generated codes,
Euclidean duals, and exhaustive weight computations.

Generator matrices are kept in RREF (leftmost pivots, monic, eliminated above
and below), so two codes are equal iff their matrices are equal.  Coordinates
are indexed by group element id for ideal-generated codes.
"""

from __future__ import annotations

import numpy as np

from . import _linalg
from .algebra import AlgebraElement, apply_antiauto, is_idempotent
from .errors import EnumerationCapError, VerificationError
from .gf import FiniteField
from .groups import builtin_mu_minus1

DEFAULT_ENUM_CAP = 1 << 24

# block-table exponent: cosets are enumerated in vectorized blocks of up to
# q^t words with q^t bounded by this
_BLOCK_WORDS = 1 << 14


class LinearCode:
    """An [n, k] linear code over F_q as a canonical generator matrix."""

    def __init__(self, field: FiniteField, rows, provenance: AlgebraElement | None = None):
        mat = _linalg.as_matrix(rows)
        if mat.size:
            red, pivots = _linalg.rref(field, mat)
        else:
            red, pivots = np.zeros((0, mat.shape[1]), dtype=np.int64), []
        red = red.copy()
        red.flags.writeable = False
        self.field = field
        self.n = int(mat.shape[1])
        self.k = int(red.shape[0])
        self.gen = red
        self.pivots = list(pivots)
        self.provenance = provenance

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.k == other.k
            and np.array_equal(self.gen, other.gen)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.gen.tobytes()))

    def __repr__(self) -> str:
        return f"[{self.n}, {self.k}] code over {self.field!r}"

    def contains(self, vec) -> bool:
        v = np.asarray(vec, dtype=np.int64)
        if v.shape != (self.n,):
            raise ValueError(f"word length {v.shape} != {self.n}")
        return _linalg.in_row_space(self.field, self.gen, self.pivots, v)


def code_from_ideal(e: AlgebraElement) -> LinearCode:
    """Row space of {g*e : g in G} as a length-n code."""
    rows = e.vec[e.group.left_translation]
    return LinearCode(e.field, rows, provenance=e)


def dual(code: LinearCode) -> LinearCode:
    """Euclidean dual; verifies the inversion-dual identity for ideal codes.

    For a code generated by an idempotent e the dual must equal the ideal
    code of 1 - mu_-1(e); a mismatch raises VerificationError.
    """
    kernel = _linalg.right_kernel(code.field, code.gen) if code.k else np.eye(code.n, dtype=np.int64)
    out = LinearCode(code.field, kernel)
    prov = code.provenance
    if prov is not None and is_idempotent(prov):
        mu1 = builtin_mu_minus1(prov.group)
        complement = AlgebraElement.one(prov.field, prov.group) - apply_antiauto(mu1, prov)
        expected = code_from_ideal(complement)
        if out != expected:
            raise VerificationError("dual of an ideal code violates the inversion-dual identity")
        out.provenance = complement
    return out


def subcode_check(inner: LinearCode, outer: LinearCode) -> bool:
    """True iff every generator row of inner lies in the row space of outer."""
    if inner.field != outer.field or inner.n != outer.n:
        raise ValueError("codes live in different spaces")
    return all(outer.contains(row) for row in inner.gen)


# ---------------------------------------------------------------------------
# exhaustive enumeration
# ---------------------------------------------------------------------------


def _combination_table(field: FiniteField, rows: np.ndarray, n: int) -> np.ndarray:
    """All q^len(rows) combinations of the given rows, in message-rank order."""
    table = np.zeros((1, n), dtype=np.int64)
    for r in rows:
        parts = [field.vadd(table, field.vmul(np.int64(c), r.reshape(1, -1))) for c in range(field.q)]
        table = np.vstack(parts)
    return table


def _coset_blocks(field: FiniteField, gen: np.ndarray, offset: np.ndarray):
    """Yield blocks of codewords offset + span(gen), covering each word once."""
    k, n = gen.shape if gen.size else (0, len(offset))
    q = field.q
    t = 0
    while t < k and q ** (t + 1) <= _BLOCK_WORDS:
        t += 1
    block = _combination_table(field, gen[k - t :] if k else gen, n)
    prefix_rows = gen[: k - t]
    kp = k - t
    if kp == 0:
        yield field.vadd(offset.reshape(1, -1), block)
        return
    digits = [0] * kp
    partial = [offset] * (kp + 1)
    yield field.vadd(partial[kp].reshape(1, -1), block)
    while True:
        i = kp - 1
        while i >= 0 and digits[i] == q - 1:
            digits[i] = 0
            i -= 1
        if i < 0:
            return
        digits[i] += 1
        partial[i + 1] = field.vadd(partial[i], field.vmul(np.int64(digits[i]), prefix_rows[i]))
        for j in range(i + 1, kp):
            partial[j + 1] = partial[j]
        yield field.vadd(partial[kp].reshape(1, -1), block)


def coset_min_weight(field: FiniteField, gen: np.ndarray, offset: np.ndarray) -> tuple[int, np.ndarray]:
    """Minimum nonzero Hamming weight over offset + span(gen), with a witness.

    The zero word (present only when the offset lies in the span) is skipped.
    """
    best = None
    witness = None
    for block in _coset_blocks(field, gen, offset):
        weights = np.count_nonzero(block, axis=1)
        nz = np.nonzero(weights)[0]
        if nz.size == 0:
            continue
        i = nz[np.argmin(weights[nz])]
        if best is None or weights[i] < best:
            best = int(weights[i])
            witness = block[i].copy()
    if best is None:
        raise ValueError("coset contains only the zero word")
    return best, witness


def min_weight_exhaustive(code: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> tuple[int, np.ndarray]:
    """Exact minimum weight by enumerating all q^k codewords."""
    if code.k < 1:
        raise ValueError("zero code has no nonzero words")
    size = code.field.q**code.k
    if size > cap:
        raise EnumerationCapError(f"q^k = {size} exceeds the cap {cap}")
    zero = np.zeros(code.n, dtype=np.int64)
    return coset_min_weight(code.field, code.gen, zero)


def weight_distribution(code: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    """Counts A_w of codewords by weight, w = 0..n."""
    size = code.field.q**code.k
    if size > cap:
        raise EnumerationCapError(f"q^k = {size} exceeds the cap {cap}")
    counts = np.zeros(code.n + 1, dtype=np.int64)
    zero = np.zeros(code.n, dtype=np.int64)
    for block in _coset_blocks(code.field, code.gen, zero):
        weights = np.count_nonzero(block, axis=1)
        counts += np.bincount(weights, minlength=code.n + 1)
    return counts


def odd_like_min_weight(duadic_codes, which: str = "e", cap: int = DEFAULT_ENUM_CAP) -> tuple[int, np.ndarray]:
    """Minimum weight of an odd-like word in D_e (or D_f), with a witness.

    Uses D = span(Ghat) + C: the odd-like words are exactly c + a*Ghat with
    c in the even-like code and a nonzero, so q^k_C * (q-1) words are scanned.
    """
    if which not in ("e", "f"):
        raise ValueError("side must be 'e' or 'f'")
    even = duadic_codes.c_e if which == "e" else duadic_codes.c_f
    field = even.field
    ghat = duadic_codes.pair.ghat.vec
    size = (field.q**even.k) * (field.q - 1)
    if size > cap:
        raise EnumerationCapError(f"q^k * (q-1) = {size} exceeds the cap {cap}")
    best = None
    witness = None
    for a in range(1, field.q):
        offset = field.vmul(np.int64(a), ghat)
        w, wit = coset_min_weight(field, even.gen, offset)
        if best is None or w < best:
            best, witness = w, wit
    return best, witness
