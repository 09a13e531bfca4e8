"""Command line front end.

    knodelwalk prob --alpha 1/2 --double --steps 2 --state top:0
    knodelwalk expected-end --alpha 1/3 --steps 8 --asymptotic
    knodelwalk verify --alpha-list 1/2,1/3,2/5

Exit codes: 0 success, 2 bad arguments, 3 a cross-check failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .asympt import EXACT_LIMIT, expected_end_exact, expected_end_float, leading_term
from .brute import diagnostic_printed_boundary
from .crosscheck import run_checks
from .routes import METHODS, probabilities
from .series import PowerSeries
from .walk import State, WalkParams, expected_end_series

EXIT_CHECK = 3


def _alpha(text: str) -> WalkParams:
    try:
        return WalkParams.parse(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _state(text: str) -> State:
    try:
        return State.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _float_text(x) -> str:
    return f"{float(x):.17g}"


def emit(rows: list[dict], columns: list[str], meta: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump({"meta": meta, "rows": rows}, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        cells = [columns] + [[str(r.get(c, "")) for c in columns] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
        for row in cells:
            out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def cmd_prob(args) -> int:
    p = args.alpha
    try:
        values = probabilities(args.state, args.steps, p, args.method, args.double)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.verify and args.method != "dp":
        ref = probabilities(args.state, args.steps, p, "dp", args.double)
        for n, (x, y) in enumerate(zip(values, ref)):
            if x != y:
                print(f"cross-check failed at step {n}: {args.method} {x} != dp {y}", file=sys.stderr)
                return EXIT_CHECK

    columns = ["method", "alpha", "state", "step", "value"]
    if args.float:
        columns.append("value_float")
    rows = []
    for n, x in enumerate(values):
        row = {"method": args.method, "alpha": str(p.alpha), "state": str(args.state), "step": n, "value": str(x)}
        if args.float:
            row["value_float"] = _float_text(x)
        rows.append(row)
    meta = {"alpha": str(p.alpha), "method": args.method, "order": args.steps,
            "state": str(args.state), "double": args.double}
    emit(rows, columns, meta, args.format)
    return 0


def cmd_expected_end(args) -> int:
    p = args.alpha
    steps = args.steps
    exact_to = min(steps, EXACT_LIMIT)
    exact = expected_end_exact(exact_to, p)
    if args.verify:
        dp = expected_end_series(exact_to, p)
        k = exact.first_difference(dp)
        if k is not None:
            print(f"cross-check failed at z^{k}: closed {exact[k]} != walk {dp[k]}", file=sys.stderr)
            return EXIT_CHECK
    floats = expected_end_float(range(exact_to + 1, steps + 1), p) if steps > exact_to else {}

    columns = ["method", "alpha", "step", "value"]
    if args.float or steps > exact_to:
        columns.append("value_float")
    if args.asymptotic:
        columns += ["estimate", "ratio"]
    rows = []
    for n in range(steps + 1):
        row = {"method": "closed", "alpha": str(p.alpha), "step": n}
        if n <= exact_to:
            val: float | Fraction = exact[n]
            row["value"] = str(exact[n])
        else:
            val = floats[n]
            row["value"] = ""
        if "value_float" in columns:
            row["value_float"] = _float_text(val)
        if args.asymptotic:
            est = leading_term(n, p) if n else 0.0
            row["estimate"] = _float_text(est)
            row["ratio"] = _float_text(float(val) / est) if n else ""
        rows.append(row)
    meta = {"alpha": str(p.alpha), "method": "closed", "order": steps, "exact_limit": EXACT_LIMIT}
    emit(rows, columns, meta, args.format)
    return 0


def _fault(s: PowerSeries) -> PowerSeries:
    c = list(s.coeffs)
    c[min(4, s.order)] += Fraction(1, 1000)
    return PowerSeries(c)


def cmd_verify(args) -> int:
    failed = None
    for p in args.alpha_list:
        print(f"alpha = {p.alpha}, order = {args.order}")
        for r in run_checks(p, args.order, fault=_fault if args.inject_fault else None):
            print("  " + r.line())
            if not r.ok and failed is None:
                failed = f"alpha={p.alpha}: {r.name}: {r.detail}"
        diag = diagnostic_printed_boundary(p, max(args.order, 8))
        if args.show_table:
            print("\n".join("    " + line for line in diag.splitlines()[:-2]))
        for line in diag.splitlines()[-2:]:
            print(f"  INFO  closed-form boundary {line}")
    if failed:
        print(f"first failure: {failed}", file=sys.stderr)
        return EXIT_CHECK
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knodelwalk", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["table", "csv", "json"], default="table")
    fmt.add_argument("--float", action="store_true", help="add a value_float column")
    fmt.add_argument("--verify", action="store_true", help="cross-check against the exact walk (exit 3 on mismatch)")

    pp = sub.add_parser("prob", parents=[fmt], help="occupation probability of one state")
    pp.add_argument("--alpha", type=_alpha, required=True, help="up-step probability as p/q")
    pp.add_argument("--steps", type=_nonneg, default=10)
    pp.add_argument("--state", type=_state, default=State("top", 0),
                    help="top:i, bottom:i, P or Q (single-step labels, also with --double)")
    pp.add_argument("--double", action="store_true",
                    help="count double steps; the state must be top:even, bottom:odd or Q")
    pp.add_argument("--method", choices=METHODS, default="dp")
    pp.set_defaults(func=cmd_prob)

    pe = sub.add_parser("expected-end", parents=[fmt],
                        help="mean end index after n double steps")
    pe.add_argument("--alpha", type=_alpha, required=True)
    pe.add_argument("--steps", type=_nonneg, default=10,
                    help=f"number of double steps; exact values up to {EXACT_LIMIT}, float beyond")
    pe.add_argument("--asymptotic", action="store_true",
                    help="add 4 sqrt(ab) sqrt(n/pi) (n = double steps) and the ratio to it")
    pe.set_defaults(func=cmd_expected_end)

    pv = sub.add_parser("verify", help="run every cross-check")
    pv.add_argument("--alpha-list", type=lambda s: [_alpha(t) for t in s.split(",") if t.strip()],
                    default=[WalkParams(Fraction(1, 2)), WalkParams(Fraction(1, 3)), WalkParams(Fraction(2, 5))])
    pv.add_argument("--order", type=_nonneg, default=32)
    pv.add_argument("--show-table", action="store_true", help="print the closed-form boundary table")
    pv.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "prob" and args.double and not args.state.is_even_class:
        build_parser().error(f"--double: {args.state} is never occupied after an even number of steps")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
