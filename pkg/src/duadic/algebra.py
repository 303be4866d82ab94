"""Arithmetic in the group algebra F_q[G], idempotent predicates, and the two
independent constructions of all centrally primitive idempotents.

The main path splits the center through its Frobenius-fixed subalgebra; the
character-theoretic construction is kept as an abelian-only cross-check
oracle.  Elements store a length-n vector of field-element indexes.
"""

from __future__ import annotations

import math

import numpy as np

from . import _linalg
from .errors import VerificationError
from .gf import FiniteField, Polynomial, multiplicative_order_mod, poly_factor
from .groups import Antiautomorphism, Group, fq_classes, is_subgroup


class AlgebraElement:
    """Element of F_q[G]: the coefficient vector (a_g), indexed by element id."""

    __slots__ = ("field", "group", "vec")

    def __init__(self, field: FiniteField, group: Group, vec):
        v = np.array(vec, dtype=np.int64)
        if v.shape != (group.order,):
            raise ValueError(f"coefficient vector must have length {group.order}")
        if v.size and (v.min() < 0 or v.max() >= field.q):
            raise ValueError("coefficient index out of field range")
        v.flags.writeable = False
        self.field = field
        self.group = group
        self.vec = v

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: FiniteField, group: Group) -> "AlgebraElement":
        return cls(field, group, np.zeros(group.order, dtype=np.int64))

    @classmethod
    def one(cls, field: FiniteField, group: Group) -> "AlgebraElement":
        return cls.basis(field, group, 0)

    @classmethod
    def basis(cls, field: FiniteField, group: Group, g: int, coeff: int = 1) -> "AlgebraElement":
        v = np.zeros(group.order, dtype=np.int64)
        v[g] = coeff
        return cls(field, group, v)

    @classmethod
    def from_coeff_list(cls, field: FiniteField, group: Group, pairs) -> "AlgebraElement":
        """Build from (element id, coefficient index) pairs, summing duplicates."""
        v = np.zeros(group.order, dtype=np.int64)
        for g, c in pairs:
            v[g] = field.add(int(v[g]), c)
        return cls(field, group, v)

    # -- basics --------------------------------------------------------------

    def _same_context(self, other: "AlgebraElement") -> None:
        if self.field != other.field or self.group != other.group:
            raise ValueError("mismatched group algebra contexts")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.field == other.field
            and self.group == other.group
            and np.array_equal(self.vec, other.vec)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.group, self.vec.tobytes()))

    def key(self) -> tuple[int, ...]:
        """Coefficient tuple, used for deterministic (lexicographic) ordering."""
        return tuple(int(x) for x in self.vec)

    @property
    def coeffs(self) -> tuple:
        return tuple(self.field.from_index(int(x)) for x in self.vec)

    def weight(self) -> int:
        return int(np.count_nonzero(self.vec))

    def support(self) -> tuple[int, ...]:
        return tuple(int(g) for g in np.nonzero(self.vec)[0])

    def coefficient_sum(self) -> int:
        return self.field.vsum(self.vec)

    def to_pairs(self) -> list[tuple[str, int]]:
        return [(self.group.element_label(g), int(self.vec[g])) for g in self.support()]

    def __repr__(self) -> str:
        if not self.support():
            return "0"
        return " + ".join(
            label if c == 1 else f"{c}*{label}" for label, c in self.to_pairs()
        )

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_context(other)
        return AlgebraElement(self.field, self.group, self.field.vadd(self.vec, other.vec))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_context(other)
        return AlgebraElement(self.field, self.group, self.field.vsub(self.vec, other.vec))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.field, self.group, self.field.vneg(self.vec))

    def scale(self, s: int) -> "AlgebraElement":
        return AlgebraElement(self.field, self.group, self.field.vmul(np.int64(s), self.vec))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return alg_mul(self, other)

    def __pow__(self, e: int) -> "AlgebraElement":
        if e < 0:
            raise ValueError("negative powers not supported")
        out = AlgebraElement.one(self.field, self.group)
        base = self
        while e:
            if e & 1:
                out = alg_mul(out, base)
            base = alg_mul(base, base)
            e >>= 1
        return out


def alg_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution product: coefficient of g is sum_h a_h * b_{h^-1 g}."""
    a._same_context(b)
    field = a.field
    left = a.group.left_translation
    support = np.nonzero(a.vec)[0]
    n = a.group.order
    if field.m == 1:
        acc = np.zeros(n, dtype=np.int64)
        for g in support:
            acc += int(a.vec[g]) * b.vec[left[g]]
        return AlgebraElement(field, a.group, acc % field.p)
    acc = np.zeros(n, dtype=np.int64)
    for g in support:
        acc = field.vadd(acc, field.vmul(np.int64(int(a.vec[g])), b.vec[left[g]]))
    return AlgebraElement(field, a.group, acc)


def hat_subgroup(field: FiniteField, group: Group, subgroup_ids) -> AlgebraElement:
    """The idempotent |N|^-1 sum_{g in N} g for a subgroup N."""
    ids = sorted(set(int(g) for g in subgroup_ids))
    if not is_subgroup(group, ids):
        raise ValueError("ids do not form a subgroup")
    size = len(ids) % field.p
    if size == 0:
        raise ValueError(f"|N| = {len(ids)} is not invertible in {field!r}")
    coeff = field.inv(field.from_int(len(ids)))
    v = np.zeros(group.order, dtype=np.int64)
    v[ids] = coeff
    return AlgebraElement(field, group, v)


def hat_group(field: FiniteField, group: Group) -> AlgebraElement:
    return hat_subgroup(field, group, range(group.order))


def is_idempotent(a: AlgebraElement) -> bool:
    return alg_mul(a, a) == a


def is_even_like(a: AlgebraElement) -> bool:
    """True iff the coefficient sum vanishes (equivalently a * Ghat = 0)."""
    return a.coefficient_sum() == 0


def is_central(a: AlgebraElement) -> bool:
    """True iff a commutes with every basis element (hence with everything)."""
    coeffs_left = a.vec[a.group.left_translation]
    coeffs_right = a.vec[a.group.right_translation]
    return bool(np.array_equal(coeffs_left, coeffs_right))


def apply_antiauto(mu: Antiautomorphism, a: AlgebraElement) -> AlgebraElement:
    """mu(sum a_g g) = sum sigma(a_g) mu_star(g)."""
    if mu.group != a.group:
        raise ValueError("antiautomorphism and element live on different groups")
    out = np.zeros_like(a.vec)
    out[mu.mu_star] = a.field.vfrobenius(a.vec, mu.frobenius_power)
    return AlgebraElement(a.field, a.group, out)


# ---------------------------------------------------------------------------
# centrally primitive idempotents
# ---------------------------------------------------------------------------


class IdempotentSet:
    """The complete set of centrally primitive idempotents of F_q[G],
    sorted by coefficient tuple; ``trivial_index`` locates Ghat."""

    def __init__(self, field: FiniteField, group: Group, members):
        ms = sorted(members, key=lambda e: e.key())
        self.field = field
        self.group = group
        self.members = tuple(ms)
        ghat = hat_group(field, group)
        try:
            self.trivial_index = ms.index(ghat)
        except ValueError:
            raise VerificationError("trivial idempotent missing from idempotent set") from None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> AlgebraElement:
        return self.members[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IdempotentSet)
            and self.field == other.field
            and self.group == other.group
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.field, self.group, self.members))

    def nontrivial(self) -> list[AlgebraElement]:
        return [e for i, e in enumerate(self.members) if i != self.trivial_index]

    def validate(self) -> None:
        """Exact structural checks; raises VerificationError on any failure."""
        total = AlgebraElement.zero(self.field, self.group)
        for e in self.members:
            if e.weight() == 0:
                raise VerificationError("zero member in idempotent set")
            if not is_idempotent(e):
                raise VerificationError(f"not idempotent: {e!r}")
            if not is_central(e):
                raise VerificationError(f"not central: {e!r}")
            total = total + e
        if total != AlgebraElement.one(self.field, self.group):
            raise VerificationError("idempotents do not sum to 1")
        for i, e in enumerate(self.members):
            for f in self.members[i + 1 :]:
                prod = alg_mul(e, f)
                if prod.weight() or alg_mul(f, e).weight():
                    raise VerificationError("idempotents are not pairwise orthogonal")
        count = len(fq_classes(self.group, self.field.q))
        if len(self.members) != count:
            raise VerificationError(
                f"{len(self.members)} idempotents vs {count} F_q-conjugacy classes"
            )


def _central_coordinates(group: Group) -> tuple[np.ndarray, list[int]]:
    """Indicator matrix of ordinary class sums and the class representatives."""
    classes = group.conjugacy_classes
    mat = np.zeros((len(classes), group.order), dtype=np.int64)
    for i, cls in enumerate(classes):
        mat[i, list(cls)] = 1
    reps = [cls[0] for cls in classes]
    return mat, reps


def split_primitive_central_idempotents(field: FiniteField, group: Group) -> IdempotentSet:
    """All centrally primitive idempotents of F_q[G], by Frobenius-kernel splitting.

    The center is spanned by ordinary conjugacy-class sums; its fixed
    subalgebra under a -> a^q is a split commutative algebra F_q^r with r the
    number of F_q-conjugacy classes.  Units of the simple components are
    separated by refining against each fixed-subalgebra basis vector through
    the roots of its minimal polynomial.
    """
    n = group.order
    q = field.q
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(|G|={n}, q={q}) != 1")
    partition = fq_classes(group, q)
    r = len(partition)
    center, reps = _central_coordinates(group)
    rc = center.shape[0]

    # matrix of a -> a^q on the class-sum basis (coordinates read off at reps)
    frob = np.zeros((rc, rc), dtype=np.int64)
    for i in range(rc):
        zi = AlgebraElement(field, group, center[i])
        ziq = zi ** q
        frob[i] = ziq.vec[reps]
    eye = np.eye(rc, dtype=np.int64)
    fixed = _linalg.right_kernel(field, field.vsub(frob.T, eye))
    if fixed.shape[0] != r:
        raise VerificationError(
            f"fixed subalgebra dimension {fixed.shape[0]} != {r} F_q-classes"
        )
    basis_vecs = _linalg.matmul(field, fixed, center)

    one = AlgebraElement.one(field, group)
    components = [one]
    for row in basis_vecs:
        if len(components) == r:
            break
        b = AlgebraElement(field, group, row)
        refined: list[AlgebraElement] = []
        for unit in components:
            refined.extend(_refine_component(field, group, reps, unit, b))
        components = refined
    if len(components) != r:
        raise VerificationError(
            f"splitting produced {len(components)} components, expected {r}"
        )
    return IdempotentSet(field, group, components)


def _refine_component(
    field: FiniteField,
    group: Group,
    reps: list[int],
    unit: AlgebraElement,
    b: AlgebraElement,
) -> list[AlgebraElement]:
    """Split a component unit by the eigenvalues of b inside it."""
    c = alg_mul(b, unit)
    # minimal polynomial of c relative to the unit, found as the first linear
    # dependence among u, c, c^2, ... in class-sum coordinates
    rows = [unit.vec[reps]]
    power = c
    coeffs = None
    while len(rows) <= len(reps) + 1:
        target = power.vec[reps]
        sol = _linalg.solve_in_span(field, np.array(rows), target)
        if sol is not None:
            coeffs = [field.neg(int(x)) for x in sol] + [1]
            break
        rows.append(target)
        power = alg_mul(power, c)
    if coeffs is None:
        raise VerificationError("no linear dependence among component powers")  # pragma: no cover
    minpoly = Polynomial(field, coeffs)
    if minpoly.degree() == 1:
        return [unit]
    factors = poly_factor(minpoly)
    if any(mult != 1 or g.degree() != 1 for g, mult in factors):
        raise VerificationError(
            f"minimal polynomial {minpoly} in the fixed subalgebra is not split squarefree"
        )
    roots = sorted(field.neg(g.coeffs[0]) for g, _ in factors)
    out = []
    for lam in roots:
        quotient, rem = divmod(minpoly, Polynomial(field, (field.neg(lam), 1)))
        if not rem.is_zero():
            raise VerificationError("root division left a remainder")  # pragma: no cover
        scale = field.inv(quotient.evaluate(lam))
        # Horner evaluation of quotient at c, with the component unit as 1
        acc = AlgebraElement.zero(field, group)
        for coeff in reversed(quotient.coeffs):
            acc = alg_mul(acc, c)
            if coeff:
                acc = acc + unit.scale(coeff)
        out.append(acc.scale(scale))
    return out


# ---------------------------------------------------------------------------
# character-theoretic oracle (abelian groups)
# ---------------------------------------------------------------------------


def _natural_abelian_basis(group: Group) -> tuple[list[int], list[int]]:
    orders = group.abelian_orders
    gens = []
    for i in range(len(orders)):
        gens.append(group.element_id([1 if j == i else 0 for j in range(len(orders))]))
    return gens, list(orders)


def _abelian_basis_from_table(group: Group) -> tuple[list[int], list[int]]:
    """Greedy cyclic decomposition of an abelian group given only by its table.

    Works prime by prime: within the p-part, repeatedly take the element of
    maximal order modulo the span and adjust it to a direct generator.
    """
    n = group.order
    orders = group.element_orders
    gens: list[int] = []
    gen_orders: list[int] = []
    for p in sorted(set(_prime_divisors(n))):
        part = [g for g in range(n) if _is_p_power(int(orders[g]), p)]
        span = {0}
        span_tuples = {0: ()}
        local: list[tuple[int, int]] = []  # (gen, order) for this prime
        while len(span) < len(part):
            best_g, best_d = -1, 0
            for g in part:
                if g in span:
                    continue
                d = _quotient_order(group, g, span)
                if d > best_d:
                    best_g, best_d = g, d
            g, d = best_g, best_d
            excess = group.power(g, d)
            exps = span_tuples[excess]
            adjust = 0
            for (bg, bord), c in zip(local, exps):
                if c % d != 0:
                    raise VerificationError("abelian basis adjustment failed")
                adjust = group.mul(adjust, group.power(bg, (c // d) % bord))
            g = group.mul(g, group.inv(adjust))
            if group.power(g, d) != 0:
                raise VerificationError("adjusted generator has wrong order")
            local.append((g, d))
            new_span = {}
            for h, tup in span_tuples.items():
                acc = h
                for j in range(d):
                    new_span[acc] = tup + (j,)
                    acc = group.mul(acc, g)
            span_tuples = new_span
            span = set(span_tuples)
        gens.extend(g for g, _ in local)
        gen_orders.extend(d for _, d in local)
    return gens, gen_orders


def _prime_divisors(n: int) -> list[int]:
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
    return out


def _is_p_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def _quotient_order(group: Group, g: int, span: set[int]) -> int:
    d = 1
    x = g
    while x not in span:
        x = group.mul(x, g)
        d += 1
    return d


def _element_exponents(group: Group, gens: list[int], gen_orders: list[int]) -> np.ndarray:
    """Matrix E with row g = the exponent tuple of g over the given basis."""
    n = group.order
    exps = np.zeros((n, len(gens)), dtype=np.int64)
    ids: dict[int, tuple[int, ...]] = {}

    def rec(i: int, acc: int, tup: tuple[int, ...]):
        if i == len(gens):
            if acc in ids:
                raise VerificationError("abelian basis is not a direct decomposition")
            ids[acc] = tup
            exps[acc] = tup
            return
        x = acc
        for e in range(gen_orders[i]):
            rec(i + 1, x, tup + (e,))
            x = group.mul(x, gens[i])

    rec(0, 0, ())
    if len(ids) != n:
        raise VerificationError("abelian basis does not enumerate the group")
    return exps


def abelian_character_idempotents(field: FiniteField, group: Group) -> IdempotentSet:
    """Centrally primitive idempotents of an abelian F_q[G] via characters.

    Characters take values among m-th roots of unity (m the exponent), which
    live in GF(q^s) realized as F_q[y]/(h) for a deterministic irreducible
    factor h of y^m - 1 with roots of order exactly m.  Galois orbits of
    characters are summed and every resulting coefficient is checked to land
    in the base field.
    """
    if not group.is_abelian:
        raise ValueError("character construction requires an abelian group")
    n = group.order
    q = field.q
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(|G|={n}, q={q}) != 1")
    if n == 1:
        return IdempotentSet(field, group, [AlgebraElement.one(field, group)])
    if group.abelian_orders is not None:
        gens, gen_orders = _natural_abelian_basis(group)
    else:
        gens, gen_orders = _abelian_basis_from_table(group)
    exps = _element_exponents(group, gens, gen_orders)
    m = group.exponent
    s = multiplicative_order_mod(q, m)
    h = _primitive_root_factor(field, m)
    if h.degree() != s:
        raise VerificationError(f"primitive factor degree {h.degree()} != ord_m(q) = {s}")

    # delta^j mod h as rows of field indexes
    powers = np.zeros((m, s), dtype=np.int64)
    y = Polynomial.x(field)
    acc = Polynomial.one(field)
    for j in range(m):
        for i, ci in enumerate(acc.coeffs):
            powers[j, i] = ci
        acc = (acc * y) % h

    orders_arr = np.array(gen_orders, dtype=np.int64)
    weights = np.array([m // d for d in gen_orders], dtype=np.int64)
    inv_n = field.inv(field.from_int(n))

    # character u-tuples share the mixed-radix id space of the basis orders;
    # Galois orbits are closures under u -> q*u componentwise
    tuples = np.zeros((n, len(gens)), dtype=np.int64)
    rest = np.arange(n)
    for i in range(len(gens) - 1, -1, -1):
        tuples[:, i] = rest % orders_arr[i]
        rest = rest // orders_arr[i]
    seen = np.zeros(n, dtype=bool)
    members = []
    for seed in range(n):
        if seen[seed]:
            continue
        orbit = []
        cur = seed
        while not seen[cur]:
            seen[cur] = True
            orbit.append(tuples[cur])
            cur = _tuple_id((q * tuples[cur]) % orders_arr, orders_arr)
        counts = np.zeros((n, m), dtype=np.int64)
        for u in orbit:
            phases = (-(exps @ (weights * u))) % m
            counts[np.arange(n), phases] += 1
        counts %= field.p
        values = _linalg.matmul(field, counts, powers)
        if np.any(values[:, 1:]):
            raise VerificationError(
                "character-orbit sum left the base field; internal error"
            )
        coeff = field.vmul(np.int64(inv_n), values[:, 0])
        members.append(AlgebraElement(field, group, coeff))
    return IdempotentSet(field, group, members)


def _tuple_id(u: np.ndarray, orders: np.ndarray) -> int:
    g = 0
    for e, o in zip(u.tolist(), orders.tolist()):
        g = g * o + e % o
    return g


def _primitive_root_factor(field: FiniteField, m: int) -> Polynomial:
    """Deterministic irreducible factor of y^m - 1 whose roots have order m."""
    xm1 = Polynomial.x_pow_minus_one(field, m)
    candidates = []
    divisors = [d for d in range(1, m) if m % d == 0]
    for g, mult in poly_factor(xm1):
        if mult != 1:
            raise VerificationError("y^m - 1 not squarefree despite gcd(m, q) = 1")
        primitive = all(
            not (Polynomial.x_pow_minus_one(field, d) % g).is_zero() for d in divisors
        )
        if primitive:
            candidates.append(g)
    if not candidates:
        raise VerificationError(f"no primitive factor of y^{m} - 1")  # pragma: no cover
    return min(candidates, key=lambda f: f.coeffs)
