"""Exact arithmetic in GF(p^m) and univariate polynomials over it.

Field elements are encoded as integer indexes: the element with coefficient
vector (c_0, ..., c_{m-1}) over the prime field (little-endian in the root of
the modulus) has index sum(c_i * p^i).  Index 0 is zero and index 1 is one.
All scalar operations work on indexes; vectorized operations accept numpy
integer arrays of indexes.  Multiplication in extension fields goes through
discrete log/antilog tables, built lazily once per field.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

FIELD_ORDER_CAP = 1 << 16

# Fixed seed for the equal-degree splitting step of the factorization, so
# repeated runs pick identical splitting elements.
_FACTOR_SEED = 0x0D7A21C


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def multiplicative_order_mod(q: int, n: int) -> int:
    """Smallest t >= 1 with q^t = 1 (mod n); 1 when n == 1."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1; multiplicative order undefined")
    if n == 1:
        return 1
    acc = q % n
    t = 1
    while acc != 1:
        acc = (acc * q) % n
        t += 1
    return t


class FiniteField:
    """Arithmetic context for GF(p^m).

    Use :func:`field_make` to construct one; the constructor itself trusts its
    arguments apart from basic checks.  Two fields with equal (p, m, modulus)
    compare equal and their elements interoperate.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > FIELD_ORDER_CAP:
            raise ValueError(f"field order {p}^{m} exceeds the cap {FIELD_ORDER_CAP}")
        if m == 1:
            if modulus is not None:
                raise ValueError("prime fields carry no modulus")
        else:
            if modulus is None or len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("extension fields need a monic degree-m modulus")
            modulus = tuple(int(c) % p for c in modulus)
            prime = FiniteField(p, 1, None)
            if not Polynomial(prime, modulus).is_irreducible():
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._key = (p, m, modulus)
        # lazy tables
        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        self._np_log: np.ndarray | None = None
        self._np_exp: np.ndarray | None = None
        self._np_digits: np.ndarray | None = None
        self._np_inv: np.ndarray | None = None
        self._np_red: np.ndarray | None = None
        self._frob_maps: dict[int, np.ndarray] = {}

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    # -- element encoding ----------------------------------------------

    def coeffs_of(self, a: int) -> tuple[int, ...]:
        """Little-endian coefficient vector of the element with index a."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def index_of(self, coeffs) -> int:
        cs = list(coeffs)
        if len(cs) != self.m:
            raise ValueError(f"need exactly {self.m} coefficients, got {len(cs)}")
        if any(c < 0 or c >= self.p for c in cs):
            raise ValueError(f"coefficients must lie in [0, {self.p})")
        idx = 0
        for c in reversed(cs):
            idx = idx * self.p + c
        return idx

    def element(self, coeffs) -> "FieldElement":
        return FieldElement(self, self.index_of(coeffs))

    def from_index(self, a: int) -> "FieldElement":
        if not 0 <= a < self.q:
            raise ValueError(f"index {a} out of range for {self!r}")
        return FieldElement(self, a)

    def from_int(self, n: int) -> int:
        """Index of the prime-subfield element n mod p."""
        return n % self.p

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, a) for a in range(self.q))

    # -- scalar arithmetic on indexes ------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return (-a) % p
        if p == 2:
            return a
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _raw_mul(self, a: int, b: int) -> int:
        """Polynomial product mod modulus, without tables (used to build them)."""
        p, m = self.p, self.m
        ca = self.coeffs_of(a)
        cb = self.coeffs_of(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce x^(m+k) using the modulus
        mod = self.modulus
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(m):
                    prod[k - m + i] = (prod[k - m + i] - c * mod[i]) % p
        idx = 0
        for c in reversed(prod[:m]):
            idx = idx * p + c
        return idx

    def _ensure_tables(self) -> None:
        if self.m == 1 or self._log is not None:
            return
        q = self.q
        # find a generator of the multiplicative group
        residues = _prime_factors(q - 1)
        gen = None
        for cand in range(2, q):
            if all(self._raw_pow(cand, (q - 1) // r) != 1 for r in residues):
                gen = cand
                break
        if gen is None:  # pragma: no cover - q >= 4 always has a generator
            raise RuntimeError("no multiplicative generator found")
        exp = [1] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._raw_mul(acc, gen)
        self._exp = exp
        self._log = log

    def _raw_pow(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        self._ensure_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inversion of zero in {self!r}")
        if self.m == 1:
            return pow(a, -1, self.p)
        self._ensure_tables()
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def power(self, a: int, e: int) -> int:
        """a^e for integer e >= 0 (e < 0 rejected; invert explicitly)."""
        if e < 0:
            raise ValueError("negative exponents not supported; use inv()")
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        self._ensure_tables()
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, t: int = 1) -> int:
        """a^(p^t)."""
        t = t % self.m
        if t == 0:
            return a
        return self.power(a, self.p**t)

    # -- vectorized arithmetic on numpy index arrays ----------------------

    def _digit_table(self) -> np.ndarray:
        if self._np_digits is None:
            idx = np.arange(self.q, dtype=np.int64)
            digits = np.empty((self.q, self.m), dtype=np.int64)
            for i in range(self.m):
                digits[:, i] = idx % self.p
                idx = idx // self.p
            self._np_digits = digits
        return self._np_digits

    def _pack_digits(self, digits: np.ndarray) -> np.ndarray:
        powers = self.p ** np.arange(self.m, dtype=np.int64)
        return digits @ powers

    def vadd(self, a: np.ndarray, b) -> np.ndarray:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        d = self._digit_table()
        return self._pack_digits((d[a] + d[b]) % self.p)

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy() if isinstance(a, np.ndarray) else a
        d = self._digit_table()
        return self._pack_digits((-d[a]) % self.p)

    def vsub(self, a: np.ndarray, b) -> np.ndarray:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        d = self._digit_table()
        return self._pack_digits((d[a] - d[b]) % self.p)

    def _log_tables_np(self) -> tuple[np.ndarray, np.ndarray]:
        if self._np_log is None:
            self._ensure_tables()
            self._np_log = np.array(self._log, dtype=np.int64)
            self._np_exp = np.array(self._exp, dtype=np.int64)
        return self._np_log, self._np_exp

    def vmul(self, a: np.ndarray, b) -> np.ndarray:
        if self.m == 1:
            return (a * b) % self.p
        log, exp = self._log_tables_np()
        a = np.asarray(a)
        b = np.asarray(b)
        out = exp[(log[a] + log[b]) % (self.q - 1)]
        zero = (a == 0) | (b == 0)
        return np.where(zero, 0, out)

    def vinv(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError(f"inversion of zero in {self!r}")
        if self.m == 1:
            if self._np_inv is None:
                self._np_inv = np.array([0] + [pow(i, -1, self.p) for i in range(1, self.p)], dtype=np.int64)
            return self._np_inv[a]
        log, exp = self._log_tables_np()
        return exp[(-log[a]) % (self.q - 1)]

    def vfrobenius(self, a: np.ndarray, t: int = 1) -> np.ndarray:
        """Vectorized a^(p^t) via a cached permutation of indexes."""
        t = t % self.m
        if t == 0:
            return np.asarray(a)
        if t not in self._frob_maps:
            e = self.p**t
            self._frob_maps[t] = np.array([self.power(x, e) for x in range(self.q)], dtype=np.int64)
        return self._frob_maps[t][np.asarray(a)]

    def _modulus_reduction(self) -> np.ndarray:
        """Rows k = 0..m-2: digit vector of x^(m+k) reduced by the modulus."""
        if self._np_red is None:
            x = self.p  # index of the element x
            rows = np.zeros((max(self.m - 1, 0), self.m), dtype=np.int64)
            for k in range(self.m - 1):
                rows[k] = self.coeffs_of(self.power(x, self.m + k))
            self._np_red = rows
        return self._np_red

    def vsum(self, a: np.ndarray, axis=None):
        """Field sum of an index array along an axis (None = total).

        Axis indexes the input array; it must be non-negative.
        """
        if self.m == 1:
            out = np.sum(a, axis=axis) % self.p
            return int(out) if axis is None else out
        d = self._digit_table()
        arr = np.asarray(a)
        if axis is None:
            digits = d[arr].reshape(-1, self.m).sum(axis=0) % self.p
            return int(self._pack_digits(digits))
        digits = d[arr].sum(axis=axis) % self.p
        return self._pack_digits(digits)


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`FiniteField`, wrapping its integer index."""

    field: FiniteField
    index: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.index)

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError("mismatched fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.index, other.index))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.index, other.index))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.index, other.index))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.index, self.field.inv(other.index)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.index, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def is_zero(self) -> bool:
        return self.index == 0

    def __repr__(self) -> str:
        return f"{self.field!r}[{self.index}]"


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


# ---------------------------------------------------------------------------
# modulus selection
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Coefficient vectors (c_0, ..., c_{m-1}) are compared low-degree-first.
    The constant term of an irreducible of degree >= 2 is nonzero, so the
    scan starts at c_0 = 1.
    """
    base = FiniteField(p, 1, None)
    count = p**m
    start = p ** (m - 1) if m >= 2 else 0
    for v in range(start, count):
        digits = []
        rest = v
        for i in range(m):
            digits.append(rest // p ** (m - 1 - i) % p)
        coeffs = tuple(digits) + (1,)
        f = Polynomial(base, coeffs)
        if f.is_irreducible():
            return coeffs
    raise RuntimeError(f"no irreducible of degree {m} over GF({p})")  # pragma: no cover


@lru_cache(maxsize=None)
def field_make(p: int, m: int) -> FiniteField:
    """Construct GF(p^m) with the deterministic (lex-smallest) modulus."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > FIELD_ORDER_CAP:
        raise ValueError(f"field order {p}^{m} exceeds the cap {FIELD_ORDER_CAP}")
    if m == 1:
        return FiniteField(p, 1, None)
    return FiniteField(p, m, _smallest_irreducible(p, m))


def field_from_order(q: int) -> FiniteField:
    """GF(q) for a prime power q."""
    for p in _prime_factors(q):
        m = 0
        n = q
        while n % p == 0:
            n //= p
            m += 1
        if n == 1:
            return field_make(p, m)
    raise ValueError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Univariate polynomial over a FiniteField.

    Coefficients are field-element indexes, little-endian, with no trailing
    zeros; the empty tuple is the zero polynomial.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- basics ----------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @classmethod
    def zero(cls, field: FiniteField) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: FiniteField) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FiniteField) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def x_pow_minus_one(cls, field: FiniteField, n: int) -> "Polynomial":
        if n == 0:
            return cls.zero(field)
        coeffs = [0] * (n + 1)
        coeffs[0] = field.neg(1)
        coeffs[n] = 1
        return cls(field, coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({self.field!r}, {self.coeffs})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xi = "x" if i == 1 else f"x^{i}"
                terms.append(xi if c == 1 else f"{c}*{xi}")
        return " + ".join(terms)

    # -- arithmetic --------------------------------------------------------

    def _same(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise ValueError("mismatched fields")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial(F, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._same(other)
        F = self.field
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = F.sub(out[i], c)
        return Polynomial(F, out)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._same(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(F)
        if len(self.coeffs) + len(other.coeffs) >= 32:
            return Polynomial(F, _np_poly_mul(F, self.coeffs, other.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial(F, out)

    def scale(self, s: int) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.mul(s, c) for c in self.coeffs])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(self.field.inv(lead))

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Polynomial.zero(F), self
        if len(self.coeffs) >= 32:
            quot, rem = _np_poly_divmod(F, self.coeffs, other.coeffs)
            return Polynomial(F, quot), Polynomial(F, rem)
        rem = list(self.coeffs)
        quot = [0] * (dq + 1)
        inv_lead = F.inv(other.coeffs[-1])
        for k in range(dq, -1, -1):
            c = F.mul(rem[k + len(other.coeffs) - 1], inv_lead)
            quot[k] = c
            if c:
                for i, oc in enumerate(other.coeffs):
                    if oc:
                        rem[k + i] = F.sub(rem[k + i], F.mul(c, oc))
        return Polynomial(F, quot), Polynomial(F, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e: int, mod: "Polynomial") -> "Polynomial":
        out = Polynomial.one(self.field)
        base = self % mod
        while e:
            if e & 1:
                out = (out * base) % mod
            base = (base * base) % mod
            e >>= 1
        return out

    def derivative(self) -> "Polynomial":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(F.from_int(i), self.coeffs[i]))
        return Polynomial(F, out)

    def evaluate(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    # -- irreducibility -----------------------------------------------------

    def is_irreducible(self) -> bool:
        """Rabin's test: x^(q^d) = x mod f and gcd(x^(q^(d/r)) - x, f) = 1."""
        d = self.degree()
        if d < 1:
            return False
        if d == 1:
            return True
        F = self.field
        q = F.q
        f = self.monic()
        x = Polynomial.x(F)
        # iterated Frobenius: h_e = x^(q^e) mod f
        h = x
        powers = {}
        for e in range(1, d + 1):
            h = h.pow_mod(q, f)
            powers[e] = h
        if powers[d] != x % f:
            return False
        for r in _prime_factors(d):
            g = (powers[d // r] - x).gcd(f)
            if not g.is_one():
                return False
        return True


# ---------------------------------------------------------------------------
# vectorized polynomial kernels (large operands)
# ---------------------------------------------------------------------------


def _np_poly_mul(field: FiniteField, a, b) -> list[int]:
    a_arr = np.array(a, dtype=np.int64)
    b_arr = np.array(b, dtype=np.int64)
    if field.m == 1:
        return [int(x) for x in np.convolve(a_arr, b_arr) % field.p]
    p, m = field.p, field.m
    digits = field._digit_table()
    da = digits[a_arr]
    db = digits[b_arr]
    wide = np.zeros((len(a) + len(b) - 1, 2 * m - 1), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            wide[:, i + j] += np.convolve(da[:, i], db[:, j])
    wide %= p
    low = wide[:, :m]
    if m > 1:
        low = low + wide[:, m:] @ field._modulus_reduction()
    low %= p
    powers = p ** np.arange(m, dtype=np.int64)
    return [int(x) for x in low @ powers]


def _np_poly_divmod(field: FiniteField, a, b) -> tuple[list[int], list[int]]:
    rem = np.array(a, dtype=np.int64)
    b_arr = np.array(b, dtype=np.int64)
    db = len(b)
    dq = len(a) - db
    quot = [0] * (dq + 1)
    inv_lead = field.inv(int(b_arr[-1]))
    for k in range(dq, -1, -1):
        c = field.mul(int(rem[k + db - 1]), inv_lead)
        quot[k] = c
        if c:
            rem[k : k + db] = field.vsub(rem[k : k + db], field.vmul(np.int64(c), b_arr))
    return quot, [int(x) for x in rem]


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------


def _pth_root(f: Polynomial) -> Polynomial:
    """For f with zero derivative (f = g(x^p)), return g."""
    F = f.field
    p = F.p
    root_exp = F.q // p  # a^(q/p) is the p-th root in GF(q)
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(F.power(f.coeffs[i], root_exp))
    return Polynomial(F, out)


def _squarefree_parts(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Squarefree decomposition of a monic polynomial in characteristic p."""
    F = f.field
    p = F.p
    acc: dict[tuple[int, ...], tuple[Polynomial, int]] = {}

    def put(poly: Polynomial, mult: int) -> None:
        if poly.degree() < 1:
            return
        key = poly.coeffs
        if key in acc:
            acc[key] = (poly, acc[key][1] + mult)
        else:
            acc[key] = (poly, mult)

    def sff(f: Polynomial, outer: int) -> None:
        fp = f.derivative()
        if fp.is_zero():
            sff(_pth_root(f), outer * p)
            return
        c = f.gcd(fp)
        w = f // c
        i = 1
        while not w.is_one():
            y = w.gcd(c)
            z = w // y
            put(z, i * outer)
            w = y
            c = c // y
            i += 1
        if not c.is_one():
            sff(_pth_root(c), outer * p)

    sff(f.monic(), 1)
    return sorted(acc.values(), key=lambda t: (t[0].degree(), t[0].coeffs))


def _distinct_degree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    F = f.field
    q = F.q
    x = Polynomial.x(F)
    out = []
    h = x
    d = 0
    g = f
    while g.degree() >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(q, g)
        part = (h - x).gcd(g)
        if not part.is_one():
            out.append((part, d))
            g = g // part
            h = h % g
    # whatever remains is irreducible: any split would need two factors of
    # degree > d, exceeding deg(g) < 2(d+1)
    if g.degree() > 0:
        out.append((g, g.degree()))
    return out


def _equal_degree_split(f: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    """Cantor-Zassenhaus: factor a monic squarefree product of degree-d irreducibles."""
    F = f.field
    if f.degree() == d:
        return [f]
    q = F.q
    n = f.degree()
    while True:
        h = Polynomial(F, [rng.randrange(q) for _ in range(n)])
        if h.degree() < 1:
            continue
        if F.p == 2:
            # trace map to GF(2): sum of h^(2^i) over the extension degree
            e = d * F.m
            t = h % f
            acc = t
            for _ in range(e - 1):
                t = t.pow_mod(2, f)
                acc = (acc + t) % f
            g = acc.gcd(f)
        else:
            t = h.pow_mod((q**d - 1) // 2, f)
            g = (t - Polynomial.one(F)).gcd(f)
        if 0 < g.degree() < n:
            left = _equal_degree_split(g, d, rng)
            right = _equal_degree_split(f // g, d, rng)
            return left + right


def poly_factor(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Factor f into monic irreducibles with multiplicities.

    The product of the factors (with multiplicities) times the leading
    coefficient of f equals f.  Output is sorted by (degree, coefficients)
    and the equal-degree stage uses a fixed-seed generator, so results are
    reproducible run to run.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree() == 0:
        return []
    rng = random.Random(_FACTOR_SEED)
    out: list[tuple[Polynomial, int]] = []
    for part, mult in _squarefree_parts(f):
        for prod, d in _distinct_degree(part):
            for irr in _equal_degree_split(prod, d, rng):
                out.append((irr.monic(), mult))
    out.sort(key=lambda t: (t[0].degree(), t[0].coeffs))
    return out


def poly_roots(f: Polynomial) -> list[int]:
    """Roots of f in its base field (with multiplicity ignored), sorted."""
    roots = []
    for g, _ in poly_factor(f):
        if g.degree() == 1:
            # x + c0 -> root -c0
            roots.append(f.field.neg(g.coeffs[0]))
    return sorted(set(roots))
