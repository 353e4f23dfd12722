"""Command-line front end.

Subcommands: det, charpoly, adjugate, inverse, trace, conj, project,
selfcheck.  Output is human-readable text, or a stable JSON report with
``--json``:

    {signature, n, N, command, method, result, checks, timing_ms}

Exit codes: 0 ok, 2 expression parse error, 3 not invertible, 4 self-check
failure, 5 unsupported dimension.  The dimension cap (default 12) can be
overridden through the CLIFFPOLY_DIM_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import charpoly as cp
from .algebra import (
    Multivector,
    Signature,
    center_project,
    geometric_product,
    grade_project,
    make_algebra,
    norm_inf,
    quaternion_type_project,
    scalar,
    scalar_part,
)
from .conjugations import (
    ConjugationSpec,
    scalar_part_via_conj,
    SCALAR_SCHEMES,
)
from .errors import (
    CliffordError,
    DimensionCapError,
    ExprSyntaxError,
    GradeRangeError,
    NotInvertibleError,
    UnsupportedDimensionError,
)
from .parsing import format_multivector, parse
from .selfcheck import run_selfcheck, SUITES

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_INVERTIBLE = 3
EXIT_SELFCHECK = 4
EXIT_DIMENSION = 5

_CAP_ENV = "CLIFFPOLY_DIM_CAP"


def _cap() -> int | None:
    raw = os.environ.get(_CAP_ENV)
    return int(raw) if raw else None


def _sig_arg(text: str) -> tuple[int, int]:
    try:
        p, q = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a 'p,q' pair of integers, got {text!r}"
        )
    return p, q


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cliffpoly",
        description="Determinants, characteristic polynomials, adjugates, "
        "and inverses of Clifford-algebra multivectors.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, expr=True, method=None):
        p.add_argument("--sig", type=_sig_arg, required=True, metavar="p,q")
        if expr:
            p.add_argument("--expr", required=True, help="multivector expression")
        if method:
            p.add_argument("--method", choices=method, default=method[0])
        p.add_argument("--json", action="store_true", dest="as_json")
        p.add_argument(
            "--tol",
            type=float,
            default=None,
            help="override the scale-aware invertibility tolerance",
        )
        return p

    common(sub.add_parser("det", help="determinant"),
           method=("fl", "bell", "closed", "bar"))
    sub.choices["det"].add_argument(
        "--n6-form", choices=("delta", "bar"), default="delta",
        help="which of the two equivalent n=6 closed forms to use",
    )
    common(sub.add_parser("charpoly", help="characteristic polynomial"),
           method=("fl", "bell", "closed"))
    common(sub.add_parser("adjugate", help="adjugate"),
           method=("fl", "bell", "closed"))
    common(sub.add_parser("inverse", help="inverse"),
           method=("fl", "bell", "closed"))
    common(sub.add_parser("trace", help="trace (N times the scalar part)"))
    sub.choices["trace"].add_argument(
        "--scheme", choices=SCALAR_SCHEMES, default=None,
        help="recover the scalar part through a conjugation scheme",
    )
    conj = common(sub.add_parser("conj", help="apply a conjugation"))
    conj.add_argument(
        "--op", required=True,
        help="hat | tilde | hat-tilde | bar | dJ (e.g. d3)",
    )
    proj = common(sub.add_parser("project", help="projections"))
    group = proj.add_mutually_exclusive_group(required=True)
    group.add_argument("--grade", type=int)
    group.add_argument("--qtype", type=int)
    group.add_argument("--center", action="store_true")

    check = sub.add_parser("selfcheck", help="randomized property suites")
    check.add_argument("--sig", type=_sig_arg, required=True, metavar="p,q")
    check.add_argument("--trials", type=int, default=100)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--suite", choices=SUITES, default="all")
    check.add_argument("--integer", action="store_true",
                       help="integer coefficients in {-2..2}")
    check.add_argument("--json", action="store_true", dest="as_json")
    return top


def _conj_spec(op: str, n: int) -> ConjugationSpec:
    if op == "hat":
        return ConjugationSpec.grade_involution(n)
    if op == "tilde":
        return ConjugationSpec.reversion(n)
    if op == "hat-tilde":
        return ConjugationSpec.clifford_conjugation(n)
    if op == "bar":
        return ConjugationSpec.bar(n)
    if op.startswith("d") and op[1:].isdigit():
        return ConjugationSpec.delta(n, int(op[1:]))
    raise UnsupportedDimensionError(f"unknown conjugation {op!r}")


def _report(args, sig: Signature, result, checks, started) -> dict:
    return {
        "signature": [sig.p, sig.q],
        "n": sig.n,
        "N": cp.rep_dimension(sig),
        "command": args.command,
        "method": getattr(args, "method", None),
        "result": result,
        "checks": checks,
        "timing_ms": round(1000.0 * (time.perf_counter() - started), 3),
    }


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    result = report["result"]
    if isinstance(result, dict):
        for key, value in result.items():
            print(f"{key}: {value}")
    else:
        print(result)
    for check in report["checks"]:
        status = "ok" if check["pass"] else "FAIL"
        print(
            f"[{status}] {check['name']}: max error {check['max_error']:.3e}"
            f" (tol {check['tol']:.1e})"
        )


def _compute(args, sig: Signature, u: Multivector):
    checks: list[dict] = []
    cmd = args.command
    if cmd == "det":
        if args.method == "closed":
            value = cp.det_closed_form(u, args.n6_form)
        else:
            value = cp.determinant(u, args.method)
        return value, checks
    if cmd == "charpoly":
        if args.method == "fl":
            poly = cp.faddeev_leverrier(u)
        elif args.method == "bell":
            poly = cp.charpoly_via_bell(u)
        else:
            poly = cp.explicit_coeffs_low_dim(u)
        return {"C": list(poly.C), "det": poly.det}, checks
    if cmd == "adjugate":
        adj = cp.adjugate(u, args.method)
        det = cp.determinant(u, args.method if args.method != "closed" else "fl")
        residue = norm_inf(geometric_product(u, adj) - scalar(sig, det))
        checks.append(
            {
                "name": "adjugate_law",
                "max_error": residue / max(1.0, abs(det)),
                "tol": 1e-8,
                "pass": residue / max(1.0, abs(det)) <= 1e-8,
            }
        )
        return format_multivector(adj), checks
    if cmd == "inverse":
        tol = args.tol if args.tol is not None else cp.INVERTIBILITY_RTOL
        ui = cp.inverse(u, args.method, rel_tol=tol)
        residue = norm_inf(geometric_product(u, ui) - scalar(sig, 1.0))
        checks.append(
            {
                "name": "inverse_roundtrip",
                "max_error": residue,
                "tol": 1e-8,
                "pass": residue <= 1e-8,
            }
        )
        return format_multivector(ui), checks
    if cmd == "trace":
        n_rep = cp.rep_dimension(sig)
        part = (
            scalar_part(u)
            if args.scheme is None
            else scalar_part_via_conj(u, args.scheme)
        )
        return {"trace": n_rep * part, "scalar_part": part}, checks
    if cmd == "conj":
        spec = _conj_spec(args.op, sig.n)
        return format_multivector(spec.apply(u)), checks
    if cmd == "project":
        if args.center:
            out = center_project(u)
        elif args.qtype is not None:
            out = quaternion_type_project(u, args.qtype)
        else:
            out = grade_project(u, args.grade)
        return format_multivector(out), checks
    raise AssertionError(f"unhandled command {cmd}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        sig = make_algebra(*args.sig, cap=_cap())
    except DimensionCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION

    if args.command == "selfcheck":
        report = run_selfcheck(
            sig, trials=args.trials, seed=args.seed,
            suite=args.suite, integer=args.integer,
        )
        report["command"] = "selfcheck"
        report["timing_ms"] = round(1000.0 * (time.perf_counter() - started), 3)
        if args.as_json:
            print(json.dumps(report, indent=2, sort_keys=True))
        else:
            for check in report["checks"]:
                status = "ok" if check["pass"] else "FAIL"
                line = (
                    f"[{status}] {check['name']}: max error "
                    f"{check['max_error']:.3e} (tol {check['tol']:.1e})"
                )
                if not check["pass"] and "offending_element" in check:
                    line += (
                        f"\n       seed {report['seed']}, element: "
                        f"{check['offending_element']}"
                    )
                print(line)
            print("all checks passed" if report["passed"] else "CHECKS FAILED")
        return EXIT_OK if report["passed"] else EXIT_SELFCHECK

    try:
        u = parse(args.expr, sig)
    except (ExprSyntaxError, GradeRangeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        result, checks = _compute(args, sig, u)
    except NotInvertibleError as exc:
        print(f"not invertible, det = {exc.det:.12g}", file=sys.stderr)
        return EXIT_NOT_INVERTIBLE
    except (UnsupportedDimensionError, GradeRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except CliffordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    _emit(_report(args, sig, result, checks, started), args.as_json)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
