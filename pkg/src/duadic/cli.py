"""Command-line frontend: existence scans, code construction, and verification
suites, with a deterministic JSON report format.

Exit codes: 0 ok, 1 usage error, 2 no splitting, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, fields as dataclass_fields
from pathlib import Path

from .algebra import AlgebraElement
from .codes import DEFAULT_ENUM_CAP, odd_like_min_weight
from .duadic import (
    DuadicPair,
    check_splitting,
    classify_duality,
    construct_pairs,
    duadic_codes,
    odd_like_bound,
    product_duadic,
    splitting_exists_mu_minus1,
)
from .errors import (
    CayleyFormatError,
    EnumerationCapError,
    NoSplittingError,
    VerificationError,
)
from .gf import field_from_order, multiplicative_order_mod
from .groups import (
    Antiautomorphism,
    Group,
    builtin_mu_minus1,
    builtin_mu_swap,
    cyclic_group,
    group_abelian,
    group_product,
    parse_permutation_text,
    product_antiauto,
    read_cayley_file,
)
from .quantum import DistanceRecord, css_build, css_distance, degeneracy_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_SPLITTING = 2
EXIT_VERIFY_FAILED = 3


# ---------------------------------------------------------------------------
# report type
# ---------------------------------------------------------------------------


@dataclass
class CodeReport:
    """One (group, q, mu) cell: existence verdicts and, when constructed,
    idempotents, dimensions, tagged distances, quantum parameters, and the
    degeneracy summary.  timing_ms is emitted as null in JSON so reports are
    byte-identical across runs."""

    group: str
    q: int
    mu: str
    existence: dict | None = None
    pairs: list | None = None
    dims: dict | None = None
    duality: dict | None = None
    distances: list | None = None
    quantum: dict | None = None
    degeneracy: dict | None = None
    timing_ms: float | None = None

    def to_dict(self, deterministic: bool = True) -> dict:
        d = asdict(self)
        if deterministic:
            d["timing_ms"] = None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CodeReport":
        names = {f.name for f in dataclass_fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**d)


def emit_json(reports: list[CodeReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


def parse_json(text: str) -> list[CodeReport]:
    return [CodeReport.from_dict(d) for d in json.loads(text)]


# ---------------------------------------------------------------------------
# spec mini-grammar
# ---------------------------------------------------------------------------


def parse_group_spec(spec: str) -> Group:
    """`7` cyclic, `3x3` abelian product, `3x3,3x3` outer product,
    `@file` Cayley table file."""
    spec = spec.strip()
    if not spec:
        raise ValueError("empty group spec")
    if "," in spec:
        parts = spec.split(",")
        if len(parts) != 2:
            raise ValueError("outer products take exactly two factors")
        return group_product(parse_group_spec(parts[0]), parse_group_spec(parts[1]))
    if spec.startswith("@"):
        return read_cayley_file(spec[1:])
    try:
        orders = [int(tok) for tok in spec.split("x")]
    except ValueError:
        raise ValueError(f"bad group spec {spec!r}") from None
    if len(orders) == 1:
        return cyclic_group(orders[0])
    return group_abelian(orders)


def parse_mu_spec(spec: str, group: Group, q: int) -> Antiautomorphism:
    """`mu-1`, `swap`, `A*B` componentwise on an outer product, `@file`."""
    spec = spec.strip()
    if "*" in spec:
        left, right = spec.split("*", 1)
        d1 = group.descriptor.split(",")
        if len(d1) != 2:
            raise ValueError("product mu spec needs an outer-product group spec")
        g1 = parse_group_spec(d1[0])
        g2 = parse_group_spec(d1[1])
        return product_antiauto(
            parse_mu_spec(left, g1, q), parse_mu_spec(right, g2, q), group
        )
    if spec == "mu-1":
        return builtin_mu_minus1(group)
    if spec == "swap":
        return builtin_mu_swap(group, q)
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            return parse_permutation_text(fh.read(), group, descriptor=spec)
    raise ValueError(f"bad mu spec {spec!r}")


def _parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _parse_range(text: str) -> list[int]:
    """`3-45` inclusive range or a comma list."""
    if "-" in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return _parse_int_list(text)


# ---------------------------------------------------------------------------
# report assembly
# ---------------------------------------------------------------------------


def _existence_fields(group: Group, q: int, mu: Antiautomorphism, ok: bool) -> dict:
    ord_crit = None
    agree = None
    if mu.descriptor == "mu-1" and group.order % 2 == 1:
        ord_crit = splitting_exists_mu_minus1(group.order, q)
        agree = ord_crit == ok
    return {"class_criterion": ok, "ord_criterion": ord_crit, "agree": agree}


def _pair_dict(pair: DuadicPair) -> dict:
    return {
        "e": [[label, c] for label, c in pair.e.to_pairs()],
        "f": [[label, c] for label, c in pair.f.to_pairs()],
    }


def _analyze_pair(pair: DuadicPair, cap: int) -> tuple[dict, dict, list, dict, dict]:
    codes = duadic_codes(pair)
    dims = {"c_e": codes.c_e.k, "c_f": codes.c_f.k, "d_e": codes.d_e.k, "d_f": codes.d_f.k}
    duality = classify_duality(pair, codes)
    duality_d = {
        "case": duality.case,
        "verified": duality.verified,
        "equalities": [[name, ok] for name, ok in duality.equalities],
    }
    bound_type, bound_value = odd_like_bound(pair)
    distances = []
    for side in ("e", "f"):
        even = codes.c_e if side == "e" else codes.c_f
        size = pair.field.q**even.k * (pair.field.q - 1)
        if size <= cap:
            value, _ = odd_like_min_weight(codes, side, cap)
            distances.append(
                {
                    "name": f"odd_like_d_{side}",
                    "value": value,
                    "exact": True,
                    "provenance": "coset-enumeration",
                }
            )
        else:
            distances.append(
                {
                    "name": f"odd_like_d_{side}",
                    "value": bound_value,
                    "exact": False,
                    "provenance": f"odd-like-{bound_type}-bound",
                }
            )
    fallback = DistanceRecord(bound_value, False, f"odd-like-{bound_type}-bound")
    css = css_build(codes.c_e, codes.d_e, witnesses=pair.witnesses, pair=pair)
    css.distance = css_distance(css, cap=cap, fallback=fallback)
    quantum_d = {
        "n": css.n,
        "k": css.k,
        "d": css.distance.value,
        "exact": css.distance.exact,
        "provenance": css.distance.provenance,
        "params": css.params(),
    }
    deg = degeneracy_report(css, cap=cap)
    degeneracy_d = {
        "degenerate": deg.degenerate,
        "sides": [
            {"side": s.side, "exact": s.exact, "counts": [[w, c] for w, c in s.counts]}
            for s in deg.sides
        ],
    }
    return dims, duality_d, distances, quantum_d, degeneracy_d


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_scan(args) -> tuple[int, list[CodeReport]]:
    qs = _parse_int_list(args.q)
    reports = []
    if args.family == "cyclic":
        ns = [n for n in _parse_range(args.n) if n % 2 == 1]
        groups = [(str(n), cyclic_group(n)) for n in ns]
    elif args.family == "pxp":
        ps = _parse_int_list(args.p)
        groups = [(f"{p}x{p}", group_abelian([p, p])) for p in ps]
    else:
        raise ValueError(f"unknown family {args.family!r}")
    for label, group in groups:
        for q in qs:
            if math.gcd(group.order, q) != 1:
                continue
            start = time.perf_counter()
            field = field_from_order(q)
            try:
                mu = parse_mu_spec(args.mu, group, q)
            except ValueError:
                continue
            check = check_splitting(mu, field, group)
            report = CodeReport(
                group=label,
                q=q,
                mu=mu.descriptor,
                existence=_existence_fields(group, q, mu, check.ok),
                timing_ms=(time.perf_counter() - start) * 1e3,
            )
            reports.append(report)
    return EXIT_OK, reports


def cmd_construct(args) -> tuple[int, list[CodeReport]]:
    q = args.q
    field = field_from_order(q)
    cap = args.max_enum
    start = time.perf_counter()
    if args.product:
        if "," not in args.group:
            raise ValueError("--product needs an outer-product group spec (G1,G2)")
        left_spec, right_spec = args.group.split(",", 1)
        if "*" in args.mu:
            mu_left, mu_right = args.mu.split("*", 1)
        else:
            mu_left = mu_right = args.mu
        g1, g2 = parse_group_spec(left_spec), parse_group_spec(right_spec)
        mu1, mu2 = parse_mu_spec(mu_left, g1, q), parse_mu_spec(mu_right, g2, q)
        pair1 = construct_pairs(mu1, field, g1, mode="canonical")[0]
        pair2 = construct_pairs(mu2, field, g2, mode="canonical")[0]
        pair = product_duadic(pair1, pair2)
        group = pair.group
        mu = pair.mu
        existence = {"class_criterion": True, "ord_criterion": None, "agree": None}
        pairs = [pair]
    else:
        group = parse_group_spec(args.group)
        mu = parse_mu_spec(args.mu, group, q)
        check = check_splitting(mu, field, group)
        existence = _existence_fields(group, q, mu, check.ok)
        if not check.ok:
            raise NoSplittingError(_no_splitting_message(group, q, mu, check), check)
        mode = "enumerate-all" if args.enumerate_all else "canonical"
        pairs = construct_pairs(mu, field, group, mode=mode, check=check)
        if not pairs:
            raise NoSplittingError("the trivial group carries no duadic pairs")
        pair = pairs[0]
    dims, duality_d, distances, quantum_d, degeneracy_d = _analyze_pair(pair, cap)
    report = CodeReport(
        group=args.group,
        q=q,
        mu=args.mu,
        existence=existence,
        pairs=[_pair_dict(p) for p in pairs],
        dims=dims,
        duality=duality_d,
        distances=distances,
        quantum=quantum_d,
        degeneracy=degeneracy_d,
        timing_ms=(time.perf_counter() - start) * 1e3,
    )
    if args.emit_matrices:
        _emit_matrices(Path(args.emit_matrices), pair, cap)
    return EXIT_OK, [report]


def _no_splitting_message(group: Group, q: int, mu: Antiautomorphism, check) -> str:
    parts = [f"no splitting for mu={mu.descriptor} on {group.descriptor} over GF({q})"]
    if mu.descriptor == "mu-1":
        t = multiplicative_order_mod(q, group.order)
        parts.append(f"ord_{group.order}({q}) = {t} is even")
    nontrivial = check.fixed_idempotent_count - 1
    parts.append(f"{nontrivial} nontrivial fixed idempotent(s)")
    return "; ".join(parts)


def _emit_matrices(directory: Path, pair: DuadicPair, cap: int) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    codes = duadic_codes(pair)
    css = css_build(codes.c_e, codes.d_e, witnesses=pair.witnesses, pair=pair)
    named = {
        "c_e.mat": codes.c_e.gen,
        "c_f.mat": codes.c_f.gen,
        "d_e.mat": codes.d_e.gen,
        "d_f.mat": codes.d_f.gen,
        "x_stabilizers.mat": css.x_stabilizers,
        "z_stabilizers.mat": css.z_stabilizers,
    }
    q = pair.field.q
    for name, mat in named.items():
        lines = [f"# {mat.shape[0]} x {mat.shape[1]} over GF({q})"]
        for row in mat:
            lines.append(" ".join(str(int(x)) for x in row))
        (directory / name).write_text("\n".join(lines) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

_EXISTENCE_Q = (2, 3, 4, 5, 7, 9)


def _suite_existence(log) -> bool:
    ok = True
    for n in range(3, 46, 2):
        for q in _EXISTENCE_Q:
            if math.gcd(n, q) != 1:
                continue
            field = field_from_order(q)
            group = cyclic_group(n)
            mu = builtin_mu_minus1(group)
            by_ord = splitting_exists_mu_minus1(n, q)
            try:
                built = bool(construct_pairs(mu, field, group))
            except NoSplittingError:
                built = False
            good = built == by_ord
            ok &= good
            if not good:
                log(f"FAIL existence n={n} q={q}: construction {built}, ord test {by_ord}")
    log(f"{'PASS' if ok else 'FAIL'} existence: cyclic n in [3,45], q in {list(_EXISTENCE_Q)}")
    return ok


def _key_prop_cells():
    for n in range(3, 32, 2):
        for q in _EXISTENCE_Q:
            if math.gcd(n, q) == 1:
                yield cyclic_group(n), q, "mu-1"
    for p in (3, 5):
        for q in _EXISTENCE_Q:
            if math.gcd(p, q) == 1:
                yield group_abelian([p, p]), q, "mu-1"
                yield group_abelian([p, p]), q, "swap"


def _suite_key_prop(log) -> bool:
    from .duadic import verify_key_proposition

    ok = True
    for group, q, mu_name in _key_prop_cells():
        field = field_from_order(q)
        mu = builtin_mu_minus1(group) if mu_name == "mu-1" else builtin_mu_swap(group, q)
        classes, idems = verify_key_proposition(mu, field, group)
        if classes != idems:
            ok = False
            log(f"FAIL key-prop {group.descriptor} q={q} mu={mu_name}: {classes} != {idems}")
    log(f"{'PASS' if ok else 'FAIL'} key-prop: fixed-class count = fixed-idempotent count")
    return ok


def _suite_structure(log) -> bool:
    ok = True
    cells = [(7, 2), (7, 4), (11, 3), (13, 3), (19, 4), (23, 2), (31, 2)]
    for n, q in cells:
        if math.gcd(n, q) != 1 or not splitting_exists_mu_minus1(n, q):
            continue
        field = field_from_order(q)
        group = cyclic_group(n)
        mu = builtin_mu_minus1(group)
        pair = construct_pairs(mu, field, group)[0]
        codes = duadic_codes(pair)
        duality = classify_duality(pair, codes)
        good = duality.verified
        bound_type, bound_value = odd_like_bound(pair)
        if field.q**codes.c_e.k * (field.q - 1) <= 1 << 16:
            d_o, _ = odd_like_min_weight(codes, "e")
            good &= d_o >= bound_value
        ok &= good
        if not good:
            log(f"FAIL structure n={n} q={q}")
    z33 = group_abelian([3, 3])
    f2 = field_from_order(2)
    pair9 = construct_pairs(builtin_mu_swap(z33, 2), f2, z33)[0]
    rep9 = classify_duality(pair9)
    ok &= rep9.case == "ii" and rep9.verified
    log(f"{'PASS' if ok else 'FAIL'} structure: dims, inclusions, duality, bounds")
    return ok


def _suite_paper81(log) -> bool:
    ok = True
    f2 = field_from_order(2)
    z33 = group_abelian([3, 3])
    mu = builtin_mu_swap(z33, 2)
    e1 = AlgebraElement.from_coeff_list(
        f2, z33, [(z33.element_id(t), 1) for t in [(1, 0), (2, 0), (1, 1), (2, 2)]]
    )
    f1 = AlgebraElement.from_coeff_list(
        f2, z33, [(z33.element_id(t), 1) for t in [(0, 1), (0, 2), (1, 2), (2, 1)]]
    )
    try:
        pair1 = DuadicPair(f2, z33, e1, f1, mu)
        pair2 = DuadicPair(f2, z33, e1, f1, mu)
    except VerificationError as exc:
        log(f"FAIL paper-81: component pair invalid: {exc}")
        return False
    ok &= pair1.fixed_by_mu_minus1
    product = product_duadic(pair1, pair2)
    codes = duadic_codes(product)
    ok &= (codes.c_e.k, codes.d_e.k) == (40, 41)
    ok &= any(w.weight() == 4 for w in product.witnesses)
    bound_type, bound_value = odd_like_bound(product)
    ok &= (bound_type, bound_value) == ("square", 9)
    css = css_build(codes.c_e, codes.d_e, witnesses=product.witnesses, pair=product)
    css.distance = css_distance(
        css, cap=DEFAULT_ENUM_CAP, fallback=DistanceRecord(bound_value, False, "odd-like-square-bound")
    )
    ok &= css.params() == "[[81,1,>=9]]_2" and not css.distance.exact
    deg = degeneracy_report(css)
    ok &= deg.degenerate
    log(f"{'PASS' if ok else 'FAIL'} paper-81: product pair, dims 40/41, weight-4 witness, [[81,1,>=9]]_2")
    return ok


_SUITES = {
    "existence": _suite_existence,
    "key-prop": _suite_key_prop,
    "structure": _suite_structure,
    "paper-81": _suite_paper81,
}


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        ok &= _SUITES[name](print)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _print_scan_table(reports: list[CodeReport]) -> None:
    header = f"{'group':>10} {'q':>3} {'mu':>10} {'class':>6} {'ord':>5} {'agree':>6} {'ms':>8}"
    print(header)
    for r in reports:
        ex = r.existence or {}
        fmt = lambda v: "-" if v is None else ("yes" if v else "no")
        ms = f"{r.timing_ms:.1f}" if r.timing_ms is not None else "-"
        print(
            f"{r.group:>10} {r.q:>3} {r.mu:>10} {fmt(ex.get('class_criterion')):>6} "
            f"{fmt(ex.get('ord_criterion')):>5} {fmt(ex.get('agree')):>6} {ms:>8}"
        )


def _print_construct_report(r: CodeReport) -> None:
    print(f"group {r.group}  q={r.q}  mu={r.mu}")
    ex = r.existence or {}
    print(
        f"existence: class-criterion={ex.get('class_criterion')} "
        f"ord-criterion={ex.get('ord_criterion')} agree={ex.get('agree')}"
    )
    for i, pd in enumerate(r.pairs or []):
        e_text = " + ".join(lbl if c == 1 else f"{c}*{lbl}" for lbl, c in pd["e"])
        f_text = " + ".join(lbl if c == 1 else f"{c}*{lbl}" for lbl, c in pd["f"])
        print(f"pair {i}: e = {e_text}")
        print(f"         f = {f_text}")
    if r.dims:
        print(
            f"dims: C_e={r.dims['c_e']} C_f={r.dims['c_f']} "
            f"D_e={r.dims['d_e']} D_f={r.dims['d_f']}"
        )
    if r.duality:
        print(f"duality: case {r.duality['case']} verified={r.duality['verified']}")
    for row in r.distances or []:
        tag = "exact" if row["exact"] else "lower-bound"
        print(f"{row['name']}: {row['value']} ({tag}, {row['provenance']})")
    if r.quantum:
        tag = "exact" if r.quantum["exact"] else "lower-bound"
        print(f"quantum: {r.quantum['params']} d={r.quantum['d']} ({tag}, {r.quantum['provenance']})")
    if r.degeneracy:
        print(f"degenerate: {r.degeneracy['degenerate']}")
        for side in r.degeneracy["sides"]:
            if side["counts"]:
                pretty = ", ".join(f"weight {w}: {c}" for w, c in side["counts"])
                kind = "exactly" if side["exact"] else "at least"
                print(f"  {side['side']}: {kind} {pretty}")
    if r.timing_ms is not None:
        print(f"time: {r.timing_ms:.1f} ms")


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="duadic", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="existence sweep over a family")
    scan.add_argument("--family", choices=["cyclic", "pxp"], default="cyclic")
    scan.add_argument("--n", default="3-45", help="cyclic orders, range `3-45` or list")
    scan.add_argument("--p", default="3,5", help="primes for the pxp family")
    scan.add_argument("--q", default="2,3,4,5,7,9", help="comma list of field orders")
    scan.add_argument("--mu", default="mu-1", help="mu spec: mu-1 | swap")
    scan.add_argument("--json", action="store_true")

    construct = sub.add_parser("construct", help="build and analyze duadic codes")
    construct.add_argument("--group", required=True, help="group spec: 7 | 3x3 | 3x3,3x3 | @file")
    construct.add_argument("--q", type=int, required=True)
    construct.add_argument("--mu", required=True, help="mu spec: mu-1 | swap | swap*swap | @file")
    construct.add_argument("--product", action="store_true", help="product construction on G1,G2")
    construct.add_argument("--enumerate-all", action="store_true")
    construct.add_argument("--emit-matrices", metavar="DIR")
    construct.add_argument("--max-enum", type=int, default=DEFAULT_ENUM_CAP)
    construct.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(_SUITES) + ["all"])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"duadic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "scan":
            code, reports = cmd_scan(args)
            if args.json:
                sys.stdout.write(emit_json(reports))
            else:
                _print_scan_table(reports)
            return code
        if args.command == "construct":
            code, reports = cmd_construct(args)
            if args.json:
                sys.stdout.write(emit_json(reports))
            else:
                for r in reports:
                    _print_construct_report(r)
            return code
        if args.command == "verify":
            return cmd_verify(args)
        raise _UsageError(f"unknown command {args.command!r}")  # pragma: no cover
    except NoSplittingError as exc:
        print(f"duadic: {exc}", file=sys.stderr)
        return EXIT_NO_SPLITTING
    except VerificationError as exc:
        print(f"duadic: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (ValueError, CayleyFormatError, EnumerationCapError, OSError) as exc:
        print(f"duadic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
