"""Duadic pairs in F_q[G]: splitting existence, construction of the four
codes, duality classification, odd-like weight bounds, and product pairs.

A duadic pair is a pair of even-like central idempotents (e, f) with
e + f = 1 - Ghat that an isometric antiautomorphism mu swaps.  Every pair
constructed here has the full axiom set re-verified exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .algebra import (
    AlgebraElement,
    IdempotentSet,
    alg_mul,
    apply_antiauto,
    hat_group,
    is_even_like,
    is_idempotent,
    split_primitive_central_idempotents,
)
from .codes import LinearCode, code_from_ideal, dual, subcode_check
from .errors import NoSplittingError, VerificationError
from .gf import FiniteField, multiplicative_order_mod
from .groups import (
    Antiautomorphism,
    FqClassPartition,
    Group,
    builtin_mu_minus1,
    fq_classes,
    group_product,
    mu_action_on_class,
    product_antiauto,
)

_ENUMERATE_ALL_MAX_PAIRS = 20


class DuadicPair:
    """Even-like idempotents (e, f) with their splitting mu; validated on build."""

    def __init__(
        self,
        field: FiniteField,
        group: Group,
        e: AlgebraElement,
        f: AlgebraElement,
        mu: Antiautomorphism,
        witnesses: tuple[AlgebraElement, ...] = (),
    ):
        if group.order % 2 == 0:
            raise ValueError(f"group order {group.order} must be odd")
        if math.gcd(group.order, field.q) != 1:
            raise ValueError(f"gcd(|G|={group.order}, q={field.q}) != 1")
        ghat = hat_group(field, group)
        one = AlgebraElement.one(field, group)
        checks = [
            ("e idempotent", is_idempotent(e)),
            ("f idempotent", is_idempotent(f)),
            ("e even-like", is_even_like(e)),
            ("f even-like", is_even_like(f)),
            ("A1: e + f = 1 - Ghat", e + f == one - ghat),
            ("A2: mu(e) = f", apply_antiauto(mu, e) == f),
            ("A2: mu(f) = e", apply_antiauto(mu, f) == e),
            ("e*f = 0", alg_mul(e, f).weight() == 0),
            ("f*e = 0", alg_mul(f, e).weight() == 0),
            ("e*Ghat = 0", alg_mul(e, ghat).weight() == 0),
            ("f*Ghat = 0", alg_mul(f, ghat).weight() == 0),
        ]
        failed = [name for name, ok in checks if not ok]
        if failed:
            raise VerificationError(f"duadic axioms violated: {', '.join(failed)}")
        self.field = field
        self.group = group
        self.e = e
        self.f = f
        self.mu = mu
        self.ghat = ghat
        mu1 = builtin_mu_minus1(group)
        m1e = apply_antiauto(mu1, e)
        self.fixed_by_mu_minus1 = m1e == e
        self.swapped_by_mu_minus1 = m1e == f
        self.witnesses = tuple(witnesses)

    def __repr__(self) -> str:
        return (
            f"DuadicPair(n={self.group.order}, q={self.field.q}, "
            f"mu={self.mu.descriptor})"
        )


@dataclass(frozen=True)
class SplittingCheck:
    """Joint idempotent-level and class-level splitting test results."""

    ok: bool
    fixed_class_ids: tuple[int, ...]
    fixed_idempotent_ids: tuple[int, ...]
    idempotents: IdempotentSet
    partition: FqClassPartition

    @property
    def fixed_class_count(self) -> int:
        return len(self.fixed_class_ids)

    @property
    def fixed_idempotent_count(self) -> int:
        return len(self.fixed_idempotent_ids)


def splitting_exists_mu_minus1(n: int, q: int) -> bool:
    """The order-of-q criterion for an inversion splitting on any group of odd order n."""
    if n % 2 == 0:
        raise ValueError(f"group order must be odd, got {n}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    return multiplicative_order_mod(q, n) % 2 == 1


def check_splitting(
    mu: Antiautomorphism,
    field: FiniteField,
    group: Group,
    idempotents: IdempotentSet | None = None,
) -> SplittingCheck:
    """Decide whether mu gives a splitting, by both available criteria.

    The idempotent-level test (no nontrivial centrally primitive idempotent
    fixed) is the ground truth; the class-level test must agree with it, and
    a disagreement raises VerificationError since the two counts coincide by
    theorem.
    """
    if mu.group != group:
        raise ValueError("antiautomorphism lives on a different group")
    if idempotents is None:
        idempotents = split_primitive_central_idempotents(field, group)
    partition = fq_classes(group, field.q)
    fixed_classes = tuple(
        cid for cid in range(len(partition)) if mu_action_on_class(mu, partition, cid) == cid
    )
    fixed_idems = []
    for i, h in enumerate(idempotents):
        img = apply_antiauto(mu, h)
        if img not in idempotents.members:
            raise VerificationError("antiautomorphism does not permute the idempotent set")
        if img == h:
            fixed_idems.append(i)
    fixed_idems = tuple(fixed_idems)
    if len(fixed_classes) != len(fixed_idems):
        raise VerificationError(
            f"fixed-class count {len(fixed_classes)} != fixed-idempotent count {len(fixed_idems)}"
        )
    ok = fixed_idems == (idempotents.trivial_index,)
    return SplittingCheck(ok, fixed_classes, fixed_idems, idempotents, partition)


def verify_key_proposition(
    mu: Antiautomorphism, field: FiniteField, group: Group
) -> tuple[int, int]:
    """(fixed class count, fixed idempotent count) including the trivial ones.

    The two numbers must be equal; this operation reports them without
    enforcing it, as the test oracle.
    """
    if mu.group != group:
        raise ValueError("antiautomorphism lives on a different group")
    idempotents = split_primitive_central_idempotents(field, group)
    partition = fq_classes(group, field.q)
    n_classes = sum(
        1 for cid in range(len(partition)) if mu_action_on_class(mu, partition, cid) == cid
    )
    n_idems = sum(1 for h in idempotents if apply_antiauto(mu, h) == h)
    return n_classes, n_idems


def construct_pairs(
    mu: Antiautomorphism,
    field: FiniteField,
    group: Group,
    mode: str = "canonical",
    check: SplittingCheck | None = None,
) -> list[DuadicPair]:
    """Duadic pairs from the pairing {h, mu(h)} of nontrivial idempotents.

    Canonical mode picks the lexicographically smaller idempotent of each
    pair; enumerate-all yields all 2^l choices, deduplicated under the
    e <-> f swap.  The trivial group yields no pairs.
    """
    if mode not in ("canonical", "enumerate-all"):
        raise ValueError(f"unknown mode {mode!r}")
    if group.order % 2 == 0:
        raise ValueError(f"group order {group.order} must be odd")
    if check is None:
        check = check_splitting(mu, field, group)
    if not check.ok:
        raise NoSplittingError(
            f"no splitting: {check.fixed_idempotent_count - 1} nontrivial idempotent(s) fixed",
            diagnostics=check,
        )
    remaining = {h.key(): h for h in check.idempotents.nontrivial()}
    halves: list[tuple[AlgebraElement, AlgebraElement]] = []
    while remaining:
        key = min(remaining)
        h = remaining.pop(key)
        partner = apply_antiauto(mu, h)
        pk = partner.key()
        if pk not in remaining:
            raise VerificationError("idempotent pairing failed")  # pragma: no cover
        remaining.pop(pk)
        halves.append((h, partner))
    if not halves:
        return []

    def build(choice: tuple[AlgebraElement, ...]) -> AlgebraElement:
        total = AlgebraElement.zero(field, group)
        for h in choice:
            total = total + h
        return total

    pairs = []
    if mode == "canonical":
        e = build(tuple(min(pair, key=lambda h: h.key()) for pair in halves))
        pairs.append(DuadicPair(field, group, e, apply_antiauto(mu, e), mu))
        return pairs
    if len(halves) > _ENUMERATE_ALL_MAX_PAIRS:
        raise ValueError(
            f"enumerate-all over 2^{len(halves)} choices refused; use canonical mode"
        )
    seen = set()
    for choice in itertools.product(*halves):
        e = build(choice)
        f = apply_antiauto(mu, e)
        ekey, fkey = e.key(), f.key()
        canon = min(ekey, fkey)
        if canon in seen:
            continue
        seen.add(canon)
        if ekey > fkey:
            e, f = f, e
        pairs.append(DuadicPair(field, group, e, f, mu))
    pairs.sort(key=lambda p: p.e.key())
    return pairs


@dataclass(frozen=True)
class DuadicCodes:
    """The four codes of a pair: even-like C_e, C_f and odd-like D_e, D_f."""

    pair: DuadicPair
    c_e: LinearCode
    c_f: LinearCode
    d_e: LinearCode
    d_f: LinearCode


def duadic_codes(pair: DuadicPair) -> DuadicCodes:
    """Build C_e = Re, C_f = Rf, D_e = R(1-f), D_f = R(1-e) and verify
    the dimension, inclusion, and direct-sum structure."""
    field, group = pair.field, pair.group
    one = AlgebraElement.one(field, group)
    c_e = code_from_ideal(pair.e)
    c_f = code_from_ideal(pair.f)
    d_e = code_from_ideal(one - pair.f)
    d_f = code_from_ideal(one - pair.e)
    n = group.order
    expected = {
        "dim C_e": (c_e.k, (n - 1) // 2),
        "dim C_f": (c_f.k, (n - 1) // 2),
        "dim D_e": (d_e.k, (n + 1) // 2),
        "dim D_f": (d_f.k, (n + 1) // 2),
    }
    bad = [f"{name}: {got} != {want}" for name, (got, want) in expected.items() if got != want]
    if bad:
        raise VerificationError("; ".join(bad))
    if not subcode_check(c_e, d_e) or not subcode_check(c_f, d_f):
        raise VerificationError("even-like codes are not inside the odd-like codes")
    if not d_e.contains(pair.ghat.vec) or not d_f.contains(pair.ghat.vec):
        raise VerificationError("Ghat missing from an odd-like code")
    return DuadicCodes(pair, c_e, c_f, d_e, d_f)


@dataclass(frozen=True)
class DualityReport:
    """Which inversion-duality case applies and the verified equalities."""

    case: str  # "i" (mu_-1 swaps e and f), "ii" (mu_-1 fixes them), or "mixed"
    equalities: tuple[tuple[str, bool], ...]
    verified: bool


def classify_duality(pair: DuadicPair, codes: DuadicCodes | None = None) -> DualityReport:
    """Check the dual identities C_e-perp = D_e (case i) / D_f (case ii).

    Pairs where mu_-1 sends e to neither e nor f are classified "mixed"; the
    general inversion-dual identity is still verified for them.
    """
    if codes is None:
        codes = duadic_codes(pair)
    dual_ce = dual(codes.c_e)
    dual_cf = dual(codes.c_f)
    if pair.swapped_by_mu_minus1:
        eqs = (
            ("C_e-perp = D_e", dual_ce == codes.d_e),
            ("C_f-perp = D_f", dual_cf == codes.d_f),
        )
        case = "i"
    elif pair.fixed_by_mu_minus1:
        eqs = (
            ("C_e-perp = D_f", dual_ce == codes.d_f),
            ("C_f-perp = D_e", dual_cf == codes.d_e),
        )
        case = "ii"
    else:
        mu1 = builtin_mu_minus1(pair.group)
        one = AlgebraElement.one(pair.field, pair.group)
        ideal = code_from_ideal(one - apply_antiauto(mu1, pair.e))
        eqs = (("C_e-perp = R(1 - mu_-1(e))", dual_ce == ideal),)
        case = "mixed"
    return DualityReport(case, eqs, all(ok for _, ok in eqs))


def odd_like_bound(pair: DuadicPair) -> tuple[str, int]:
    """The applicable odd-like weight bound and the smallest weight meeting it.

    The square bound d^2 >= n holds for every splitting; the sharpened bound
    d^2 - d + 1 >= n applies when the splitting is the inversion map itself.
    """
    n = pair.group.order
    if pair.mu.is_inversion_for(pair.field):
        d = 1
        while d * d - d + 1 < n:
            d += 1
        return "sharpened", d
    d = 1
    while d * d < n:
        d += 1
    return "square", d


def _embed_left(a: AlgebraElement, product: Group, n2: int) -> AlgebraElement:
    vec = [0] * product.order
    for g in a.support():
        vec[g * n2] = int(a.vec[g])
    return AlgebraElement(a.field, product, vec)


def _embed_right(a: AlgebraElement, product: Group) -> AlgebraElement:
    vec = [0] * product.order
    for g in a.support():
        vec[g] = int(a.vec[g])
    return AlgebraElement(a.field, product, vec)


def product_duadic(pair1: DuadicPair, pair2: DuadicPair) -> DuadicPair:
    """Duadic pair on G1 x G2 with e = e1 + e2 - e1*e2 - f1*e2 and mu = mu1 x mu2."""
    if pair1.field != pair2.field:
        raise ValueError("pairs live over different fields")
    field = pair1.field
    g1, g2 = pair1.group, pair2.group
    product = group_product(g1, g2)
    if math.gcd(product.order, field.q) != 1:
        raise ValueError(f"gcd(|G1 x G2|={product.order}, q={field.q}) != 1")
    n2 = g2.order
    e1 = _embed_left(pair1.e, product, n2)
    f1 = _embed_left(pair1.f, product, n2)
    e2 = _embed_right(pair2.e, product)
    f2 = _embed_right(pair2.f, product)
    e = e1 + e2 - alg_mul(e1, e2) - alg_mul(f1, e2)
    f = f1 + f2 - alg_mul(f1, f2) - alg_mul(e1, f2)
    mu = product_antiauto(pair1.mu, pair2.mu, product)
    # low-weight members of Re or Rf, kept as degeneracy evidence
    candidates = [e1, f1, e2, f2]
    candidates += [_embed_left(w, product, n2) for w in pair1.witnesses]
    candidates += [_embed_right(w, product) for w in pair2.witnesses]
    witnesses = []
    seen = set()
    for w in candidates:
        if (alg_mul(e, w) == w or alg_mul(f, w) == w) and w.key() not in seen:
            witnesses.append(w)
            seen.add(w.key())
    return DuadicPair(field, product, e, f, mu, witnesses=tuple(witnesses))
