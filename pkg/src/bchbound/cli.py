"""Command line front end: analysis, construction, distance, reproduction.

Exit codes: 0 success, 1 reproduction mismatch, 2 usage error,
3 computational error. BCHBOUND_WORKERS sets the worker count used when
reproducing the coset tables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import tables
from .bounds import certify_equality, code_apparent_distance
from .codes import bose_distance, code_from_defining_set
from .errors import BchboundError
from .galois import build_field, nth_root, root_from_x
from .modring import (
    coset_closure,
    cyclotomic_cosets,
    multiplicative_order,
    representative_set,
)
from .polyring import Poly, factor_xn
from .wtdist import DEFAULT_CAP, min_distance

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


def _parse_field_poly(text, q):
    try:
        exps = sorted({int(t) for t in text.split(",")}, reverse=True)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad field polynomial {text!r}")
    if not exps or exps[-1] != 0:
        raise argparse.ArgumentTypeError(
            "field polynomial needs a constant term (exponent 0)")
    coeffs = [0] * (exps[0] + 1)
    for e in exps:
        coeffs[e] = 1
    return tuple(coeffs)


def _make_root(n, q, field_poly=None):
    """Primitive n-th root plus a JSON-friendly description of it."""
    if field_poly is not None:
        spec = build_field(q, len(field_poly) - 1, field_poly)
        try:
            root = root_from_x(spec, n)
            return root, {"min_poly": _poly_exponents(field_poly)}
        except BchboundError:
            root = nth_root(spec, n)
    else:
        m = multiplicative_order(q, n)
        spec = build_field(q, m)
        root = nth_root(spec, n)
    exponent = (spec.order - 1) // n
    return root, {"generator_exponent": exponent}


def _poly_exponents(coeffs):
    return sorted((i for i, c in enumerate(coeffs) if c), reverse=True)


def _parse_defining_set(text, n, q):
    body = text
    if text.startswith("coset:"):
        body = text[len("coset:"):]
    try:
        members = [int(t) % n for t in body.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad defining set {text!r}")
    if text.startswith("coset:"):
        return coset_closure(members, n, q)
    return frozenset(members)


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _code_record(code, alpha_info, report=None, bose="unset"):
    rec = code.json_record()
    rec["alpha"] = alpha_info
    if report is None:
        report = code_apparent_distance(code)
    rec["bch_bound"] = report.overall
    rec["optimal_reps"] = sorted(report.optimal_reps)
    if bose == "unset":
        bose = bose_distance(code)
    rec["bose_distance"] = bose
    return rec, report


def _build_code(args):
    root, alpha_info = _make_root(args.n, args.q, args.field_poly)
    d_set = _parse_defining_set(args.defining_set, args.n, args.q)
    return code_from_defining_set(args.n, args.q, root, d_set), alpha_info


def cmd_cosets(args):
    part = cyclotomic_cosets(args.n, args.q)
    reps = representative_set(part)
    payload = {
        "n": args.n,
        "q": args.q,
        "cosets": [list(c) for c in part.cosets],
        "representatives": [c[0] for c in part.cosets],
        "a_set": sorted(reps.members),
        "order": reps.order,
    }
    lines = [f"{len(part.cosets)} cosets mod {args.n} under multiplication "
             f"by {args.q} (ord = {reps.order})"]
    lines += [f"  C({c[0]}) = {{{', '.join(map(str, c))}}}" for c in part.cosets]
    lines.append(f"A({args.n}) = {{{', '.join(map(str, sorted(reps.members)))}}}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_factor(args):
    root, alpha_info = _make_root(args.n, args.q, args.field_poly)
    factors = factor_xn(args.n, root, subfield_degree=args.subfield)
    items = [{"coset_rep": min(coset), "coset": sorted(coset),
              "exponents": poly.exponents()}
             for poly, coset in factors.factors]
    payload = {"n": args.n, "q": args.q,
               "field_poly": _poly_exponents(root.spec.modulus),
               "alpha": alpha_info, "subfield_degree": args.subfield,
               "factors": items}
    lines = [f"x^{args.n} - 1 has {len(items)} irreducible factors over "
             f"GF({args.q ** args.subfield})"]
    for item, (poly, _) in zip(items, factors.factors):
        lines.append(f"  C({item['coset_rep']}): {poly}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_analyze(args):
    code, alpha_info = _build_code(args)
    rec, report = _code_record(code, alpha_info)
    lines = [
        f"[{code.n},{code.dimension}] code over GF({code.q})",
        f"defining set: {sorted(code.defining_set)}",
        f"generator:    {code.generator}",
        f"BCH bound:    {report.overall} "
        f"(optimal representatives {sorted(report.optimal_reps)})",
        f"Bose distance: {rec['bose_distance']}",
    ]
    if args.certify:
        cert = certify_equality(code)
        if cert is None:
            rec["certificate"] = None
            lines.append("certificate:  none found (d may exceed the bound)")
        else:
            rec["certificate"] = {
                "divisor": cert.divisor.exponents(),
                "k": cert.k,
                "representative": cert.representative,
            }
            lines.append(f"certificate:  divisor of degree "
                         f"{cert.divisor.degree}, shift {cert.k}, "
                         f"representative {cert.representative}")
    _emit(args, rec, lines)
    return EXIT_OK


def cmd_mindist(args):
    code, alpha_info = _build_code(args)
    rec, report = _code_record(code, alpha_info)
    res = min_distance(code, cap=args.cap)
    rec["min_distance"] = res.distance
    rec["exhaustive"] = res.exhaustive
    qualifier = "" if res.exhaustive else " (upper bound, cap reached)"
    lines = [
        f"[{code.n},{code.dimension}] code over GF({code.q})",
        f"minimum distance: {res.distance}{qualifier} "
        f"after {res.enumerated} words",
        f"BCH bound:        {report.overall}",
    ]
    _emit(args, rec, lines)
    return EXIT_OK


def _record_payload(rec, alpha_info):
    code_rec, _ = _code_record(rec.code, alpha_info)
    payload = {
        "source": rec.source,
        "divisor": rec.divisor.exponents(),
        "k": rec.k,
        "dimension": rec.dimension,
        "bch_bound": rec.bch_bound,
        "generator_word": sorted(rec.generator_word.support()),
        "verified": rec.verified,
        "code": code_rec,
    }
    if rec.verified:
        payload["min_distance"] = rec.bch_bound
    return payload


def _forge_divisor(args, root):
    from .forge import construct_from_divisor, find_shift

    factors = factor_xn(args.n, root, subfield_degree=args.subfield)
    if args.quotient is None:
        raise argparse.ArgumentTypeError(
            "--quotient is required for divisor and extend modes")
    g = factors.full_product()
    for rep in args.quotient:
        g = g // factors.factor_for_coset_rep(rep)
    k = args.shift
    if k is None:
        k = find_shift(g, root, args.q)
        if k is None:
            raise BchboundError(f"no rational shift exists for this divisor")
    return g, k, construct_from_divisor(g, k, root, args.q)


def cmd_forge(args):
    root, alpha_info = _make_root(args.n, args.q, args.field_poly)
    records = []
    if args.mode == "divisor":
        records = [_forge_divisor(args, root)[2]]
    elif args.mode == "extend":
        from .forge import extend_to_bch, record_for_bch

        g, k, _ = _forge_divisor(args, root)
        records = [record_for_bch(spec) for spec in extend_to_bch(g, k, root,
                                                                  args.q)]
    elif args.mode == "congruence":
        from .forge import congruence_construct

        factors = factor_xn(args.n, root, subfield_degree=args.subfield)
        h = factors.factor_for_coset_rep(args.coset)
        coset = next(c for _, c in factors.factors if min(c) == args.coset)
        members = [args.j] if args.j is not None else sorted(coset)
        for j in members:
            rec = congruence_construct(h, j, root, args.q)
            if rec is not None:
                records.append(rec)
                break
    elif args.mode == "primitive":
        from .forge import primitive_family

        m = args.n.bit_length()
        if args.n != (1 << m) - 1 or args.q != 2:
            raise argparse.ArgumentTypeError(
                "primitive mode needs q = 2 and n = 2^m - 1")
        records = primitive_family(m, root)
    if args.verify:
        records = [rec.verify() for rec in records]
    payload = {"mode": args.mode,
               "records": [_record_payload(r, alpha_info) for r in records]}
    lines = [f"{len(records)} construction(s) in {args.mode} mode"]
    for rec in records:
        status = "verified d = bound" if rec.verified else "unverified"
        lines.append(f"  dim {rec.dimension}, bound {rec.bch_bound}, "
                     f"shift {rec.k}, word exponents "
                     f"{sorted(rec.generator_word.support())} [{status}]")
    if not records:
        lines.append("  (the construction hypothesis failed; nothing built)")
    _emit(args, payload, lines)
    return EXIT_OK


def _row_dict(row):
    return {
        "n": row.n, "q": row.q,
        "complement_defining_set": list(row.complement_reps),
        "dimension": row.dimension, "min_distance": row.min_distance,
        "bch_bound": row.bch_bound, "bose_distance": row.bose_distance,
        "flag": row.flag,
    }


def cmd_reproduce(args):
    workers = int(os.environ.get("BCHBOUND_WORKERS", "1"))
    golden = tables.golden_rows(args.table)
    fresh = tables.recompute(args.table, workers=workers)
    report = sys.stderr if args.emit else sys.stdout
    failures = 0
    for idx, (want, got) in enumerate(zip(golden, fresh)):
        fields = []
        if want.complement_reps != got.complement_reps:
            fields.append(("complement", want.complement_reps,
                           got.complement_reps))
        for name, a, b in zip(("dim", "d", "bound", "bose"),
                              want.values(), got.values()):
            if a != b:
                fields.append((name, a, b))
        if not fields:
            note = f" [{want.flag}]" if want.flag else ""
            print(f"row {idx + 1:2d}: ok   n={want.n} "
                  f"C({','.join(map(str, want.complement_reps))}) "
                  f"dim={want.dimension} d={want.min_distance} "
                  f"bound={want.bch_bound}{note}", file=report)
            continue
        detail = "; ".join(f"{f}: golden {a} vs recomputed {b}"
                           for f, a, b in fields)
        if want.flag == "dup":
            print(f"row {idx + 1:2d}: info (duplicated source row) {detail}",
                  file=report)
        else:
            failures += 1
            print(f"row {idx + 1:2d}: FAIL {detail}", file=report)
    if len(golden) != len(fresh):
        failures += 1
        print(f"row count differs: golden {len(golden)}, "
              f"recomputed {len(fresh)}", file=report)
    print(f"{args.table}: {len(golden)} rows, {failures} mismatch(es)",
          file=report)
    if args.emit == "csv":
        tables.write_csv(fresh, sys.stdout)
    elif args.emit == "json":
        print(json.dumps([_row_dict(r) for r in fresh], indent=2,
                         sort_keys=True))
    return EXIT_MISMATCH if failures else EXIT_OK


def _add_code_args(sub, defining_set=True):
    sub.add_argument("--n", type=int, required=True, help="code length")
    sub.add_argument("--q", type=int, required=True, help="alphabet size")
    sub.add_argument("--field-poly", default=None,
                     help="splitting-field modulus as exponents, e.g. 12,3,0")
    if defining_set:
        sub.add_argument("--defining-set", required=True,
                         help="explicit list 1,2,4 or coset:a1,a2 shorthand")
    sub.add_argument("--json", action="store_true", help="emit JSON")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bchbound",
        description="Cyclic and BCH codes: BCH bounds, distances, and "
                    "constructions meeting the bound.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("cosets", help="cyclotomic cosets and A(n)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=cmd_cosets)

    sub = subs.add_parser("factor", help="factor x^n - 1 into minimal "
                                         "polynomials")
    _add_code_args(sub, defining_set=False)
    sub.add_argument("--subfield", type=int, default=1,
                     help="factor over GF(q^D) instead of GF(q)")
    sub.set_defaults(func=cmd_factor)

    sub = subs.add_parser("analyze", help="BCH bound, Bose distance, "
                                          "optional equality certificate")
    _add_code_args(sub)
    sub.add_argument("--certify", action="store_true",
                     help="search for a divisor certificate of d = bound")
    sub.set_defaults(func=cmd_analyze)

    sub = subs.add_parser("mindist", help="brute-force minimum distance")
    _add_code_args(sub)
    sub.add_argument("--cap", type=int, default=DEFAULT_CAP,
                     help="enumeration budget in codewords")
    sub.set_defaults(func=cmd_mindist)

    sub = subs.add_parser("forge", help="build codes whose distance meets "
                                        "the BCH bound")
    _add_code_args(sub, defining_set=False)
    sub.add_argument("--mode", required=True,
                     choices=("divisor", "congruence", "primitive", "extend"))
    sub.add_argument("--subfield", type=int, default=1)
    sub.add_argument("--quotient", type=lambda t: [int(x) for x in t.split(",")],
                     default=None,
                     help="coset reps of the factors removed from x^n - 1")
    sub.add_argument("--shift", type=int, default=None,
                     help="cyclic shift k (default: smallest rational one)")
    sub.add_argument("--coset", type=int, default=None,
                     help="congruence mode: coset rep of the factor h")
    sub.add_argument("--j", type=int, default=None,
                     help="congruence mode: evaluation exponent")
    sub.add_argument("--verify", action="store_true",
                     help="recheck bound, dimension and distance")
    sub.set_defaults(func=cmd_forge)

    sub = subs.add_parser("reproduce", help="recompute a reference table "
                                            "and diff it against the golden "
                                            "copy")
    sub.add_argument("table", choices=tables.TABLE_IDS)
    sub.add_argument("--emit", choices=("csv", "json"), default=None,
                     help="write the recomputed table to stdout")
    sub.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "field_poly", None) is not None:
        args.field_poly = _parse_field_poly(args.field_poly, args.q)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.exit(EXIT_USAGE, f"error: {exc}\n")
    except BchboundError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
