"""Command line: compute, verify, demo-remarks.

Exit codes: 0 ok, 1 mismatch, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .jacobi_trudi import E_det, E_det_finite, H_det, det, e_matrix, g_dual_via_phi, h_matrix
from .polyring import Polynomial, canonical_string, substitute_t, to_json_obj
from .rpp import g_col_flagged, g_row_flagged, g_unflagged_truncated
from .shapes import (
    Flags,
    NonPartitionInput,
    SkewShape,
    flag_condition_col,
    flag_condition_row,
    is_partition,
    pad,
    parse_partition,
)
from .sweeps import MODES, verify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

METHODS = ("enum", "det-e", "det-e-finite", "det-h", "phi-t1")


class UsageError(Exception):
    pass


def _vector(text: str, name: str) -> tuple:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rppjt", description="Flagged refined dual stable Grothendieck polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute one polynomial")
    c.add_argument("--outer", required=True, help="lambda, e.g. 3,3")
    c.add_argument("--inner", default="", help="mu, e.g. 2,0")
    kind = c.add_mutually_exclusive_group()
    kind.add_argument("--row", action="store_const", dest="flag_kind", const="row", help="row-flagged lambda/mu")
    kind.add_argument("--col", action="store_const", dest="flag_kind", const="col", help="column-flagged lambda'/mu'")
    c.add_argument("--alpha", help="lower bounds (exclusive)")
    c.add_argument("--beta", help="upper bounds (inclusive)")
    c.add_argument("--nx", type=int, help="number of x variables (unflagged)")
    c.add_argument("--method", choices=METHODS, default="enum")
    c.add_argument("--t", choices=("0", "1"), dest="t_special", help="set every t_i to this value")
    c.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="exhaustive differential sweep")
    v.add_argument("--mode", choices=MODES, required=True)
    v.add_argument("--max-part", type=int, default=3)
    v.add_argument("--max-len", type=int, default=3)
    v.add_argument("--max-flag", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)

    sub.add_parser("demo-remarks", help="reproduce the three counterexample instances")
    return parser


# ---------------------------------------------------------------------------
# compute


def compute(args: argparse.Namespace) -> Polynomial:
    lam, mu = _vector(args.outer, "outer"), _vector(args.inner, "inner")
    n = max(len(lam), len(mu))
    lam, mu = pad(lam, n), pad(mu, n)
    if not (is_partition(lam) and is_partition(mu)):
        raise NonPartitionInput(f"outer {lam} and inner {mu} must be partitions")
    shape = SkewShape(lam, mu)
    kind = args.flag_kind or "none"
    method = args.method

    if kind == "none":
        if args.alpha is not None or args.beta is not None:
            raise UsageError("--alpha/--beta need --row or --col")
        if args.nx is None or args.nx < 0:
            raise UsageError("unflagged computation needs --nx >= 0")
        nx = args.nx
        if method == "enum":
            p = g_unflagged_truncated(shape, nx)
        elif method == "det-h":
            p = H_det(shape, Flags.constant(n, nx))
        elif method in ("det-e", "det-e-finite"):
            # the e-determinant of the transpose gives the same shape
            conj = shape.transpose()
            flags = Flags.constant(conj.n, nx)
            p = E_det(conj, flags) if method == "det-e" else E_det_finite(conj, flags)
        else:
            if args.t_special != "1":
                raise UsageError("--method phi-t1 computes the t=1 value; pass --t 1")
            return g_dual_via_phi(shape, nx)
    else:
        if args.alpha is None or args.beta is None:
            raise UsageError(f"--{kind} needs --alpha and --beta")
        if args.nx is not None:
            raise UsageError("--nx applies to unflagged computations only")
        alpha, beta = _vector(args.alpha, "alpha"), _vector(args.beta, "beta")
        if len(alpha) != n or len(beta) != n:
            raise UsageError(f"--alpha and --beta need {n} entries")
        flags = Flags(alpha, beta)
        if kind == "row":
            if method == "enum":
                p = g_row_flagged(shape, flags)
            elif method == "det-h":
                p = H_det(shape, flags)
            else:
                raise UsageError(f"--method {method} is not available for --row")
        else:
            if method == "enum":
                p = g_col_flagged(shape.transpose(), flags)
            elif method == "det-e":
                p = E_det(shape, flags)
            elif method == "det-e-finite":
                p = E_det_finite(shape, flags)
            else:
                raise UsageError(f"--method {method} is not available for --col")
    if args.t_special is not None:
        p = substitute_t(p, default=int(args.t_special))
    return p


def cmd_compute(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    p = compute(args)
    if args.json:
        obj = to_json_obj(p)
        obj["canonical"] = canonical_string(p)
        print(json.dumps(obj, sort_keys=True), file=out)
    else:
        print(canonical_string(p), file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    if min(args.max_part, args.max_len, args.max_flag) < 0:
        raise UsageError("sweep bounds must be nonnegative")
    report = verify(args.mode, args.max_part, args.max_len, args.max_flag, seed=args.seed)
    print(report.summary(), file=out)
    if report.mismatches:
        first = report.mismatches[0]
        print(f"first mismatch: {first.request}", file=out)
        print(f"  lhs: {first.lhs}", file=out)
        print(f"  rhs: {first.rhs}", file=out)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# demo-remarks

REMARK_INSTANCES = [
    ("column-flagged e-determinant", "col", (3, 3), (2, 0), (2, 0), (2, 2)),
    ("row-flagged h-determinant", "row", (2, 2), (1, 0), (1, 0), (1, 1)),
    ("h-determinant with a non-partition inner shape", "row", (1, 1), (0, 1), (0, 0), (1, 1)),
]


def remark_report(kind: str, lam, mu, alpha, beta) -> dict:
    """Predicate, enumeration value, matrix and determinant for one instance."""
    shape, flags = SkewShape(lam, mu), Flags(alpha, beta)
    if kind == "col":
        matrix = e_matrix(lam, mu, alpha, beta)
        predicate = ("flag_condition_col", flag_condition_col(shape, flags))
        enum = g_col_flagged(shape.transpose(), flags)
    else:
        matrix = h_matrix(lam, mu, alpha, beta)
        if is_partition(mu):
            predicate = ("flag_condition_row", flag_condition_row(shape, flags))
        else:
            predicate = ("is_partition(mu)", False)
        enum = g_row_flagged(shape, flags)
    return {"predicate": predicate, "enum": enum, "matrix": matrix, "det": det(matrix)}


def cmd_demo_remarks(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    for idx, (title, kind, lam, mu, alpha, beta) in enumerate(REMARK_INSTANCES, start=1):
        rep = remark_report(kind, lam, mu, alpha, beta)
        print(f"[{idx}] {title}", file=out)
        print(f"    lambda={lam} mu={mu} alpha={alpha} beta={beta}", file=out)
        name, value = rep["predicate"]
        print(f"    {name}: {value}", file=out)
        print(f"    enumeration: {canonical_string(rep['enum'])}", file=out)
        for i, row in enumerate(rep["matrix"], start=1):
            for j, entry in enumerate(row, start=1):
                print(f"    entry({i},{j}) = {canonical_string(entry)}", file=out)
        print(f"    determinant: {canonical_string(rep['det'])}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {"compute": cmd_compute, "verify": cmd_verify, "demo-remarks": cmd_demo_remarks}
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonPartitionInput as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
