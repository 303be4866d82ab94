"""CSS stabilizer codes from nested classical codes, with exact set-difference
distances when enumerable and tagged lower bounds otherwise."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _linalg
from .codes import (
    DEFAULT_ENUM_CAP,
    LinearCode,
    _combination_table,
    coset_min_weight,
    dual,
    subcode_check,
    weight_distribution,
)
from .duadic import DuadicPair, construct_pairs, duadic_codes, odd_like_bound
from .errors import EnumerationCapError, NoSplittingError, VerificationError
from .gf import FiniteField
from .groups import Antiautomorphism, Group


@dataclass(frozen=True)
class DistanceRecord:
    """A distance value with its exactness tag and how it was obtained."""

    value: int
    exact: bool
    provenance: str

    def tag(self) -> str:
        return "exact" if self.exact else "lower-bound"


class CssCode:
    """An [[n, k, d]]_q stabilizer code built from classical codes C inside D.

    X-stabilizers are the generators of C, Z-stabilizers those of the dual
    of D; their exact Euclidean orthogonality is re-verified on build.
    """

    def __init__(
        self,
        code_c: LinearCode,
        code_d: LinearCode,
        distance: DistanceRecord | None = None,
        witnesses: tuple = (),
        pair: DuadicPair | None = None,
    ):
        if code_c.field != code_d.field or code_c.n != code_d.n:
            raise ValueError("C and D live in different spaces")
        if not subcode_check(code_c, code_d):
            raise ValueError("CSS construction needs C contained in D")
        self.field = code_c.field
        self.code_c = code_c
        self.code_d = code_d
        self.dual_d = dual(code_d)
        self.n = code_c.n
        self.k = code_d.k - code_c.k
        self.x_stabilizers = code_c.gen
        self.z_stabilizers = self.dual_d.gen
        if self.x_stabilizers.size and self.z_stabilizers.size:
            prod = _linalg.matmul(self.field, self.x_stabilizers, self.z_stabilizers.T)
            if np.any(prod):
                raise VerificationError("X and Z stabilizers are not orthogonal")
        self.distance = distance
        self.witnesses = tuple(witnesses)
        self.pair = pair

    def params(self) -> str:
        if self.distance is None:
            d = "?"
        else:
            d = str(self.distance.value) if self.distance.exact else f">={self.distance.value}"
        return f"[[{self.n},{self.k},{d}]]_{self.field.q}"

    def __repr__(self) -> str:
        return f"CssCode({self.params()})"


def css_build(
    code_c: LinearCode,
    code_d: LinearCode,
    distance: DistanceRecord | None = None,
    witnesses: tuple = (),
    pair: DuadicPair | None = None,
) -> CssCode:
    return CssCode(code_c, code_d, distance=distance, witnesses=witnesses, pair=pair)


def _complement_rows(small: LinearCode, big: LinearCode) -> np.ndarray:
    """Rows of big extending small: the big generators whose pivot column is
    not a pivot column of small (valid because the RREFs are nested)."""
    small_pivots = set(small.pivots)
    rows = [big.gen[i] for i, c in enumerate(big.pivots) if c not in small_pivots]
    if len(rows) != big.k - small.k:
        raise VerificationError("pivot nesting failed; codes are not nested")
    return np.array(rows, dtype=np.int64) if rows else np.zeros((0, big.n), dtype=np.int64)


def _difference_min_weight(
    field: FiniteField, small: LinearCode, big: LinearCode
) -> tuple[int, np.ndarray]:
    """Minimum weight over big \\ small, enumerating nonzero complement cosets."""
    ext = _complement_rows(small, big)
    offsets = _combination_table(field, ext, big.n)[1:]
    best = None
    witness = None
    for offset in offsets:
        w, wit = coset_min_weight(field, small.gen, offset)
        if best is None or w < best:
            best, witness = w, wit
    if best is None:
        raise ValueError("set difference is empty (C = D)")
    return best, witness


def css_distance(
    code: CssCode, cap: int = DEFAULT_ENUM_CAP, fallback: DistanceRecord | None = None
) -> DistanceRecord:
    """Exact d = min weight over (D \\ C) union (C-perp \\ D-perp).

    When the duadic duality collapses the two differences (C-perp equals D as
    a code), only one enumeration runs.  Above the cap the supplied fallback
    bound is returned; with no fallback the cap is a hard error.
    """
    if code.k == 0:
        raise ValueError("k = 0 code has no logical operators to weigh")
    q = code.field.q
    c_perp = dual(code.code_c)
    collapsed = c_perp == code.code_d
    sides = [(code.code_c, code.code_d)]
    if not collapsed:
        sides.append((code.dual_d, c_perp))
    total = sum(q**big.k - q**small.k for small, big in sides)
    if total > cap:
        if fallback is not None:
            return fallback
        raise EnumerationCapError(f"distance enumeration of {total} words exceeds cap {cap}")
    best = None
    for small, big in sides:
        w, _ = _difference_min_weight(code.field, small, big)
        if best is None or w < best:
            best = w
    return DistanceRecord(best, True, "coset-enumeration")


def quantum_duadic(
    field: FiniteField,
    group: Group,
    mu: Antiautomorphism,
    cap: int = DEFAULT_ENUM_CAP,
) -> CssCode:
    """End-to-end pipeline: splitting check, canonical pair, duadic codes,
    CSS code on (C_e, D_e) with an exact or bound-tagged distance."""
    pairs = construct_pairs(mu, field, group, mode="canonical")
    if not pairs:
        raise NoSplittingError("the trivial group carries no duadic pairs")
    pair = pairs[0]
    codes = duadic_codes(pair)
    bound_type, bound_d = odd_like_bound(pair)
    fallback = DistanceRecord(bound_d, False, f"odd-like-{bound_type}-bound")
    code = css_build(codes.c_e, codes.d_e, witnesses=pair.witnesses, pair=pair)
    code.distance = css_distance(code, cap=cap, fallback=fallback)
    return code


@dataclass(frozen=True)
class SideEvidence:
    """Sub-distance codewords found on one stabilizer side."""

    side: str  # "C" (X-stabilizer code) or "D-perp" (Z-stabilizer code)
    exact: bool
    counts: tuple[tuple[int, int], ...]  # (weight, number of words), weights < d


@dataclass(frozen=True)
class DegeneracyReport:
    degenerate: bool
    distance: DistanceRecord
    sides: tuple[SideEvidence, ...]


def degeneracy_report(code: CssCode, cap: int = DEFAULT_ENUM_CAP) -> DegeneracyReport:
    """Find codewords of C and D-perp below the code distance.

    Such words are stabilizer-equivalent to the identity, so errors matching
    them need no correction.  Counts are exact when the side is enumerable;
    otherwise witness words (and their group translates, for ideal-generated
    codes) give lower-bound evidence.
    """
    if code.distance is None:
        raise ValueError("code has no distance record; run css_distance first")
    d = code.distance.value
    sides = []
    degenerate = False
    for name, side_code in (("C", code.code_c), ("D-perp", code.dual_d)):
        if side_code.k == 0:
            sides.append(SideEvidence(name, True, ()))
            continue
        if code.field.q**side_code.k <= cap:
            dist = weight_distribution(side_code, cap)
            counts = tuple(
                (w, int(dist[w])) for w in range(1, min(d, len(dist))) if dist[w]
            )
            sides.append(SideEvidence(name, True, counts))
        else:
            found: dict[int, set[bytes]] = {}
            for w in code.witnesses:
                wt = w.weight()
                if 0 < wt < d and side_code.contains(w.vec):
                    translates = found.setdefault(wt, set())
                    for row in w.vec[w.group.left_translation]:
                        translates.add(row.tobytes())
            counts = tuple((wt, len(tr)) for wt, tr in sorted(found.items()))
            sides.append(SideEvidence(name, False, counts))
        if sides[-1].counts:
            degenerate = True
    return DegeneracyReport(degenerate, code.distance, tuple(sides))
