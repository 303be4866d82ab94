"""Finite groups via explicit multiplication tables, F_q-conjugacy classes,
and isometric antiautomorphisms in (group antiautomorphism, Frobenius power)
normal form.

Element ids run 0..n-1 with id 0 the identity.  Groups built as direct
products of cyclic factors keep their exponent-tuple structure for labeling;
Cayley-table groups label elements by raw id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from string import ascii_lowercase

import numpy as np

from .errors import CayleyFormatError
from .gf import multiplicative_order_mod

GROUP_ORDER_CAP = 512


class Group:
    """Finite group of order n as a fully validated n x n multiplication table."""

    def __init__(self, table, descriptor: str = "", abelian_orders: tuple[int, ...] | None = None):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError(f"Cayley table must be square, got shape {t.shape}")
        n = t.shape[0]
        if n == 0:
            raise ValueError("empty Cayley table")
        if n > GROUP_ORDER_CAP:
            raise ValueError(f"group order {n} exceeds the validation cap {GROUP_ORDER_CAP}")
        self.table = t
        self.order = n
        self.descriptor = descriptor or f"cayley(n={n})"
        self.abelian_orders = tuple(abelian_orders) if abelian_orders else None
        self._validate()
        self.inverse = self._build_inverse()
        self._orders: np.ndarray | None = None
        self._exponent: int | None = None
        self._left: np.ndarray | None = None
        self._right: np.ndarray | None = None
        self._classes: tuple[tuple[int, ...], ...] | None = None
        self._hash: int | None = None

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        t = self.table
        n = self.order
        if t.min() < 0 or t.max() >= n:
            bad = np.argwhere((t < 0) | (t >= n))[0]
            raise ValueError(
                f"not a group (closure): entry at row {bad[0]}, column {bad[1]} is out of range"
            )
        ids = np.arange(n)
        if not np.array_equal(t[0], ids) or not np.array_equal(t[:, 0], ids):
            raise ValueError("not a group (identity): id 0 is not a two-sided identity")
        # every row and column must be a permutation, which with associativity
        # gives unique two-sided inverses
        if any(len(np.unique(t[g])) != n for g in range(n)):
            raise ValueError("not a group (inverses): some row is not a permutation")
        if any(len(np.unique(t[:, g])) != n for g in range(n)):
            raise ValueError("not a group (inverses): some column is not a permutation")
        for a in range(n):
            lhs = t[t[a], :]
            rhs = t[a][t]
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                raise ValueError(
                    f"not a group (associativity): ({a}*{b})*{c} != {a}*({b}*{c})"
                )

    def _build_inverse(self) -> np.ndarray:
        n = self.order
        inv = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(self.table == 0)
        inv[rows] = cols
        for g in range(n):
            if self.table[inv[g], g] != 0:
                raise ValueError(f"not a group (inverses): element {g} lacks a two-sided inverse")
        return inv

    # -- identity and equality --------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.table.tobytes())
        return self._hash

    def __repr__(self) -> str:
        return f"Group({self.descriptor}, n={self.order})"

    # -- structure ---------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, g: int, e: int) -> int:
        if e < 0:
            g = self.inv(g)
            e = -e
        out = 0
        base = g
        while e:
            if e & 1:
                out = int(self.table[out, base])
            base = int(self.table[base, base])
            e >>= 1
        return out

    @property
    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            n = self.order
            orders = np.ones(n, dtype=np.int64)
            for g in range(1, n):
                x = g
                k = 1
                while x != 0:
                    x = int(self.table[x, g])
                    k += 1
                orders[g] = k
            self._orders = orders
        return self._orders

    @property
    def exponent(self) -> int:
        if self._exponent is None:
            self._exponent = int(np.lcm.reduce(self.element_orders))
        return self._exponent

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @property
    def left_translation(self) -> np.ndarray:
        """L[g, x] = id of g^-1 * x, so (g*a) has coefficients a[L[g]]."""
        if self._left is None:
            self._left = self.table[self.inverse]
            self._left.flags.writeable = False
        return self._left

    @property
    def right_translation(self) -> np.ndarray:
        """R[g, x] = id of x * g^-1, so (a*g) has coefficients a[R[g]]."""
        if self._right is None:
            self._right = self.table[:, self.inverse].T.copy()
            self._right.flags.writeable = False
        return self._right

    @property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Ordinary conjugacy classes, sorted by smallest member."""
        if self._classes is None:
            n = self.order
            seen = np.zeros(n, dtype=bool)
            classes = []
            for seed in range(n):
                if seen[seed]:
                    continue
                orbit = {seed}
                stack = [seed]
                while stack:
                    x = stack.pop()
                    for h in range(n):
                        y = int(self.table[self.table[self.inverse[h], x], h])
                        if y not in orbit:
                            orbit.add(y)
                            stack.append(y)
                cls = tuple(sorted(orbit))
                for x in cls:
                    seen[x] = True
                classes.append(cls)
            self._classes = tuple(classes)
        return self._classes

    # -- labels --------------------------------------------------------------

    def element_tuple(self, g: int) -> tuple[int, ...]:
        if self.abelian_orders is None:
            raise ValueError("element tuples only exist for abelian product groups")
        out = []
        for n_i in reversed(self.abelian_orders):
            out.append(g % n_i)
            g //= n_i
        return tuple(reversed(out))

    def element_id(self, exponents) -> int:
        if self.abelian_orders is None:
            raise ValueError("element tuples only exist for abelian product groups")
        exps = list(exponents)
        if len(exps) != len(self.abelian_orders):
            raise ValueError("wrong tuple length")
        g = 0
        for e, n_i in zip(exps, self.abelian_orders):
            g = g * n_i + e % n_i
        return g

    def element_label(self, g: int) -> str:
        if self.abelian_orders is None:
            return str(g)
        exps = self.element_tuple(g)
        letters = _generator_letters(len(exps))
        return "*".join(f"{letters[i]}^{e}" for i, e in enumerate(exps))


def _generator_letters(k: int) -> list[str]:
    if k <= len(ascii_lowercase):
        return list(ascii_lowercase[:k])
    return [f"g{i}" for i in range(k)]


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def group_abelian(orders) -> Group:
    """Direct product of cyclic groups Z_n1 x ... x Z_nk.

    Element ids are the row-major mixed-radix encoding of exponent tuples
    (last factor varies fastest); the identity is the all-zero tuple, id 0.
    """
    ords = [int(x) for x in orders]
    if not ords:
        raise ValueError("need at least one cyclic factor")
    if any(o < 2 for o in ords):
        raise ValueError(f"cyclic factor orders must be >= 2, got {ords}")
    n = math.prod(ords)
    if n > GROUP_ORDER_CAP:
        raise ValueError(f"group order {n} exceeds the validation cap {GROUP_ORDER_CAP}")
    table = np.zeros((1, 1), dtype=np.int64)
    for o in ords:
        block = (np.arange(o)[:, None] + np.arange(o)[None, :]) % o
        m = table.shape[0]
        table = (table[:, None, :, None] * o + block[None, :, None, :]).reshape(m * o, m * o)
    return Group(table, descriptor="x".join(str(o) for o in ords), abelian_orders=ords)


def cyclic_group(n: int) -> Group:
    # n = 1 is allowed here (degenerate scans); group_abelian itself rejects it
    if n == 1:
        return Group([[0]], descriptor="1")
    return group_abelian([n])


def group_from_cayley(table, descriptor: str = "") -> Group:
    """Validated group from an explicit n x n id matrix."""
    return Group(table, descriptor=descriptor)


def group_product(g1: Group, g2: Group) -> Group:
    """Direct product G1 x G2 with ids packed as g1 * |G2| + g2."""
    n1, n2 = g1.order, g2.order
    if n1 * n2 > GROUP_ORDER_CAP:
        raise ValueError(f"product order {n1 * n2} exceeds the validation cap {GROUP_ORDER_CAP}")
    table = (g1.table[:, None, :, None] * n2 + g2.table[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    orders = None
    if g1.abelian_orders is not None and g2.abelian_orders is not None:
        orders = g1.abelian_orders + g2.abelian_orders
    return Group(table, descriptor=f"{g1.descriptor},{g2.descriptor}", abelian_orders=orders)


def is_subgroup(group: Group, ids) -> bool:
    """True iff ids is nonempty, contains the identity, and is closed."""
    s = set(int(x) for x in ids)
    if not s or 0 not in s:
        return False
    return all(int(group.table[a, b]) in s for a in s for b in s) and all(
        int(group.inverse[a]) in s for a in s
    )


# ---------------------------------------------------------------------------
# F_q-conjugacy classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FqClassPartition:
    """Partition of a group into F_q-conjugacy classes.

    Each class is the closure of a seed under conjugation and g -> g^q;
    classes are sorted by (and represented by) their smallest element id.
    """

    group: Group
    q: int
    classes: tuple[tuple[int, ...], ...]
    class_of: np.ndarray
    reps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


def fq_classes(group: Group, q: int) -> FqClassPartition:
    n = group.order
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd(q={q}, |G|={n}) != 1")
    table = group.table
    inv = group.inverse
    seen = np.zeros(n, dtype=bool)
    classes = []
    abelian = group.is_abelian
    for seed in range(n):
        if seen[seed]:
            continue
        orbit = {seed}
        stack = [seed]
        while stack:
            x = stack.pop()
            y = group.power(x, q)
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
            if not abelian:
                for h in range(n):
                    z = int(table[table[inv[h], x], h])
                    if z not in orbit:
                        orbit.add(z)
                        stack.append(z)
        cls = tuple(sorted(orbit))
        for x in cls:
            seen[x] = True
        classes.append(cls)
    class_of = np.zeros(n, dtype=np.int64)
    reps = []
    for i, cls in enumerate(classes):
        reps.append(cls[0])
        for x in cls:
            class_of[x] = i
    return FqClassPartition(group, q, tuple(classes), class_of, tuple(reps))


# ---------------------------------------------------------------------------
# antiautomorphisms
# ---------------------------------------------------------------------------


class Antiautomorphism:
    """Isometric antiautomorphism of F_q[G] in normal form.

    Acts on a scalar multiple of a group element as the group antiautomorphism
    mu_star composed with the field automorphism x -> x^(p^t), where t is
    ``frobenius_power``.
    """

    def __init__(self, group: Group, mu_star, frobenius_power: int = 0, descriptor: str = ""):
        perm = np.array(mu_star, dtype=np.int64)
        n = group.order
        if perm.shape != (n,):
            raise ValueError(f"mu_star must be a length-{n} permutation")
        if sorted(perm.tolist()) != list(range(n)):
            raise ValueError("mu_star is not a bijection")
        if perm[0] != 0:
            raise ValueError("mu_star must fix the identity")
        t = group.table
        lhs = perm[t]
        rhs = t[np.ix_(perm, perm)].T
        if not np.array_equal(lhs, rhs):
            g, h = np.argwhere(lhs != rhs)[0]
            raise ValueError(
                f"mu_star is not an antiautomorphism: mu({g}*{h}) != mu({h})*mu({g})"
            )
        if frobenius_power < 0:
            raise ValueError("frobenius power must be >= 0")
        self.group = group
        self.mu_star = perm
        self.mu_star.flags.writeable = False
        self.frobenius_power = int(frobenius_power)
        self.descriptor = descriptor or "perm"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Antiautomorphism)
            and self.group == other.group
            and np.array_equal(self.mu_star, other.mu_star)
            and self.frobenius_power == other.frobenius_power
        )

    def __hash__(self) -> int:
        return hash((self.group, self.mu_star.tobytes(), self.frobenius_power))

    def __repr__(self) -> str:
        return f"Antiautomorphism({self.descriptor}, t={self.frobenius_power})"

    def map(self, g: int) -> int:
        return int(self.mu_star[g])

    def galois_exponents(self, q: int) -> tuple[int, int]:
        """(k, l) with k = p^t mod exponent and k*l = 1 mod exponent.

        k is the exponent by which the extension of x -> x^(p^t) acts on
        m-th roots of unity; l is its inverse used in the class action.
        """
        p = _characteristic_of(q)
        e = 0
        qq = q
        while qq > 1:
            qq //= p
            e += 1
        t = self.frobenius_power % e
        m = self.group.exponent
        k = pow(p, t, m)
        ell = pow(k, -1, m)
        return k, ell

    def is_inversion_for(self, field) -> bool:
        """True iff this map is exactly mu_-1 on F_q[G] (sigma trivial on F_q)."""
        return bool(
            np.array_equal(self.mu_star, self.group.inverse)
            and self.frobenius_power % field.m == 0
        )


def _characteristic_of(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            return p
    raise ValueError(f"invalid field order {q}")


def builtin_mu_minus1(group: Group) -> Antiautomorphism:
    """The inversion map g -> g^-1 with trivial field part."""
    return Antiautomorphism(group, group.inverse.copy(), 0, descriptor="mu-1")


def builtin_mu_swap(group: Group, q: int) -> Antiautomorphism:
    """The coordinate-swap map (x, y) -> (q*y, x) on Z_p x Z_p."""
    orders = group.abelian_orders
    if orders is None or len(orders) != 2 or orders[0] != orders[1]:
        raise ValueError("swap antiautomorphism needs a group built as Z_p x Z_p")
    p = orders[0]
    if p == 2 or not _is_odd_prime(p):
        raise ValueError(f"swap antiautomorphism needs an odd prime p, got {p}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd(p={p}, q={q}) != 1")
    xs, ys = np.divmod(np.arange(p * p), p)
    perm = (q * ys % p) * p + xs
    return Antiautomorphism(group, perm, 0, descriptor="swap")


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def product_antiauto(mu1: Antiautomorphism, mu2: Antiautomorphism, product: Group | None = None) -> Antiautomorphism:
    """Componentwise antiautomorphism on G1 x G2."""
    if mu1.frobenius_power != mu2.frobenius_power:
        raise ValueError(
            f"mismatched Frobenius powers: {mu1.frobenius_power} != {mu2.frobenius_power}"
        )
    if product is None:
        product = group_product(mu1.group, mu2.group)
    n1, n2 = mu1.group.order, mu2.group.order
    if product.order != n1 * n2:
        raise ValueError("product group does not match the component groups")
    perm = (mu1.mu_star[:, None] * n2 + mu2.mu_star[None, :]).reshape(-1)
    return Antiautomorphism(
        product, perm, mu1.frobenius_power, descriptor=f"{mu1.descriptor}*{mu2.descriptor}"
    )


def mu_action_on_class(mu: Antiautomorphism, partition: FqClassPartition, class_id: int) -> int:
    """Image class id under K -> K(mu_star(rep)^l)."""
    if mu.group != partition.group:
        raise ValueError("antiautomorphism and partition live on different groups")
    if not 0 <= class_id < len(partition.classes):
        raise ValueError(f"class id {class_id} out of range")
    _, ell = mu.galois_exponents(partition.q)
    rep = partition.reps[class_id]
    img = partition.group.power(mu.map(rep), ell)
    return int(partition.class_of[img])


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def parse_cayley_text(text: str, descriptor: str = "") -> Group:
    """Parse the Cayley-table text format.

    Line 1 holds n; lines 2..n+1 hold n whitespace-separated ids each
    (row g, column h, entry g*h).  Raises CayleyFormatError with line and
    column positions on malformed input.
    """
    lines = text.splitlines()
    stripped = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    rows = [(no, ln) for no, ln in stripped if ln and not ln.startswith("#")]
    if not rows:
        raise CayleyFormatError("empty Cayley file")
    no, header = rows[0]
    try:
        n = int(header.split()[0])
    except ValueError:
        raise CayleyFormatError(f"expected group order, got {header!r}", line=no) from None
    if n < 1:
        raise CayleyFormatError(f"group order must be >= 1, got {n}", line=no)
    if len(rows) - 1 != n:
        raise CayleyFormatError(
            f"expected {n} table rows, found {len(rows) - 1}", line=rows[-1][0]
        )
    table = np.zeros((n, n), dtype=np.int64)
    for r in range(n):
        no, ln = rows[1 + r]
        parts = ln.split()
        if len(parts) != n:
            raise CayleyFormatError(
                f"expected {n} entries in table row {r}, found {len(parts)}", line=no
            )
        for c, tok in enumerate(parts):
            try:
                v = int(tok)
            except ValueError:
                raise CayleyFormatError(
                    f"non-integer table entry {tok!r}", line=no, column=c + 1
                ) from None
            if not 0 <= v < n:
                raise CayleyFormatError(
                    f"table entry {v} out of range [0, {n})", line=no, column=c + 1
                )
            table[r, c] = v
    return group_from_cayley(table, descriptor=descriptor or f"cayley(n={n})")


def read_cayley_file(path) -> Group:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cayley_text(fh.read(), descriptor=f"@{path}")


def format_cayley(group: Group) -> str:
    lines = [str(group.order)]
    for row in group.table:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_permutation_text(text: str, group: Group, descriptor: str = "") -> Antiautomorphism:
    """Parse the explicit-antiautomorphism format.

    Line 1 holds n, line 2 the n images of mu_star, line 3 the Frobenius
    power (optional, default 0).
    """
    rows = [
        (i + 1, ln.strip())
        for i, ln in enumerate(text.splitlines())
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if len(rows) < 2:
        raise CayleyFormatError("permutation file needs an order line and an image line")
    no, header = rows[0]
    try:
        n = int(header)
    except ValueError:
        raise CayleyFormatError(f"expected group order, got {header!r}", line=no) from None
    if n != group.order:
        raise CayleyFormatError(
            f"permutation is for order {n}, group has order {group.order}", line=no
        )
    no, ln = rows[1]
    parts = ln.split()
    if len(parts) != n:
        raise CayleyFormatError(f"expected {n} images, found {len(parts)}", line=no)
    try:
        perm = [int(tok) for tok in parts]
    except ValueError:
        raise CayleyFormatError("non-integer permutation image", line=no) from None
    t = 0
    if len(rows) > 2:
        no, ln = rows[2]
        try:
            t = int(ln)
        except ValueError:
            raise CayleyFormatError(f"expected Frobenius power, got {ln!r}", line=no) from None
    return Antiautomorphism(group, perm, t, descriptor=descriptor or "perm")


def ord_criterion_mu_minus1(n: int, q: int) -> bool:
    """The number-theoretic existence test: ord_n(q) odd."""
    return multiplicative_order_mod(q, n) % 2 == 1
