"""Command-line front end.

Commands: coeff, classify, scan, verify-props, mt-check, selftest.
Exit status: 0 on success, 1 on usage/resource errors, 2 on an internal
consistency red flag (cm/series mismatch, inexact division, verifier
failures, a violated biconditional, or an unexplained zero).

Machine-readable output (json, csv) is stable and deterministic: records
are emitted in index order and big integers are decimal strings.  Text
output is for humans and may change.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterable

from . import classify, props, series
from .errors import BudgetError, ConsistencyError, Eta26Error
from .hecke import AlgInt3, p26_cm, t1_prime, t2_prime

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RED_FLAG = 2

_EULER_PREFIX = (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1,
                 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1)
_JACOBI_PREFIX = (1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9,
                  0, 0, 0, 0, -11, 0, 0, 0, 0, 0, 13)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _emit(lines: Iterable[str]) -> None:
    sys.stdout.write("".join(f"{line}\n" for line in lines))


def _jsonl(records: Iterable[dict]) -> list[str]:
    return [json.dumps(r, separators=(",", ":")) for r in records]


def _add_output_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=("json", "csv", "text"), default="text",
                   help="output format (default: text)")


def _cmd_coeff(args: argparse.Namespace) -> int:
    n, r = args.n, args.r
    if n < 0:
        raise UsageError("n must be >= 0")
    if r < 1:
        raise UsageError("--r must be >= 1")
    method = args.method or ("cm" if r == 26 else "series")
    if method in ("cm", "both") and r != 26:
        raise UsageError("--method cm/both requires --r 26")
    values: dict[str, int] = {}
    if method in ("cm", "both"):
        values["cm"] = p26_cm(n)
    if method in ("series", "both"):
        values["series"] = series.eta_power_series(r, n, args.budget_mb)[n]
    if method == "both" and values["cm"] != values["series"]:
        sys.stderr.write(
            f"red flag: cm and series disagree at n={n}: "
            f"{values['cm']} != {values['series']}\n"
        )
        return EXIT_RED_FLAG
    value = values[method if method != "both" else "cm"]
    if args.output == "json":
        record: dict = {"n": n, "r": r, "method": method,
                        "coefficient": str(value)}
        if method == "both":
            record["cm"] = str(values["cm"])
            record["series"] = str(values["series"])
        _emit(_jsonl([record]))
    elif args.output == "csv":
        _emit(["n,r,method,coefficient", f"{n},{r},{method},{value}"])
    else:
        suffix = "  (cm and series agree)" if method == "both" else ""
        _emit([f"p_{r}({n}) = {value}{suffix}"])
    return EXIT_OK


def _classify_text(report: classify.VanishingReport) -> list[str]:
    prof = report.profile
    factors = " * ".join(f"{p}^{e}" for p, e in prof.factorization) or "1"
    applied = ", ".join(report.explanation) or "none"
    return [
        f"n = {prof.n}, m = {prof.m} = {factors}",
        f"flags: condI={prof.cond_i} condII={prof.cond_ii} "
        f"n1={prof.n1} n2={prof.n2}",
        f"p26({prof.n}) = {report.p26_value}",
        f"predicted: {report.predicted}  applied: {applied}  "
        f"consistent: {report.consistent}",
    ]


def _cmd_classify(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("n must be >= 0")
    report = classify.apply_theorems(args.n)
    if args.output == "json":
        _emit(_jsonl([classify.report_record(report)]))
    elif args.output == "csv":
        _emit([classify.CSV_HEADER, classify.report_csv_row(report)])
    else:
        _emit(_classify_text(report))
    return EXIT_OK if report.consistent else EXIT_RED_FLAG


def _cmd_scan(args: argparse.Namespace) -> int:
    if args.start < 0 or args.end < args.start:
        raise UsageError("scan expects 0 <= start <= end")
    reports, summary = classify.scan(args.start, args.end)
    if args.output == "json":
        lines = _jsonl(classify.report_record(r) for r in reports)
        lines.append(json.dumps({"summary": classify.summary_record(summary)},
                                separators=(",", ":")))
        _emit(lines)
    elif args.output == "csv":
        lines = [classify.CSV_HEADER]
        lines.extend(classify.report_csv_row(r) for r in reports)
        _emit(lines)
        sys.stderr.write(
            f"zeros: {summary.zero_count}, explained: "
            f"{summary.explained_zero_count}, unexplained: "
            f"{list(summary.unexplained_zeros)}\n"
        )
    else:
        lines = []
        for r in reports:
            tag = "ZERO" if r.p26_value == 0 else "nonzero"
            applied = ",".join(r.explanation) or "-"
            lines.append(
                f"n={r.profile.n} m={r.profile.m} {tag} [{applied}] "
                f"p26={r.p26_value}"
            )
        lines.append(
            f"summary: {summary.zero_count} zeros, "
            f"{summary.explained_zero_count} explained, "
            f"unexplained: {list(summary.unexplained_zeros)}"
        )
        _emit(lines)
    bad = [r for r in reports if not r.consistent]
    if bad or summary.unexplained_zeros:
        sys.stderr.write(
            f"red flag: {len(bad)} inconsistent reports, unexplained zeros "
            f"{list(summary.unexplained_zeros)}\n"
        )
        return EXIT_RED_FLAG
    return EXIT_OK


def _cmd_verify_props(args: argparse.Namespace) -> int:
    reports = props.run_all(args.prime_bound, args.exp_bound, args.l_bound)
    if args.output == "json":
        _emit(_jsonl(props.report_record(r) for r in reports))
    elif args.output == "csv":
        lines = ["prop_id,prime_bound,exponent_bound,checked,failures"]
        lines.extend(
            f"{r.prop_id},{r.prime_bound},{r.exponent_bound},{r.checked},"
            f"{len(r.failures)}"
            for r in reports
        )
        _emit(lines)
    else:
        _emit(
            f"{r.prop_id}: checked {r.checked} primes below {r.prime_bound} "
            + ("OK" if r.ok else f"FAILURES {list(r.failures)}")
            for r in reports
        )
    if any(not r.ok for r in reports):
        sys.stderr.write("red flag: verifier reported failures\n")
        return EXIT_RED_FLAG
    return EXIT_OK


def _cmd_mt_check(args: argparse.Namespace) -> int:
    if args.start < 0 or args.end < args.start:
        raise UsageError("mt-check expects 0 <= start <= end")
    check = classify.check_25n_plus_1 if args.family == 25 else classify.check_49n_plus_3
    reports = [check(n) for n in range(args.start, args.end + 1)]
    gated = [r for r in reports if r.predicted != classify.PREDICT_NONE]
    bad = [r for r in gated if not r.consistent]
    if args.output == "json":
        lines = _jsonl(classify.report_record(r) for r in reports)
        lines.append(json.dumps(
            {"summary": {"checked": len(reports), "gated": len(gated),
                         "violations": [r.profile.n for r in bad]}},
            separators=(",", ":")))
        _emit(lines)
    elif args.output == "csv":
        lines = [classify.CSV_HEADER]
        lines.extend(classify.report_csv_row(r) for r in reports)
        _emit(lines)
    else:
        lines = []
        for r in reports:
            state = r.explanation[0] if r.explanation else "-"
            lines.append(
                f"n={r.profile.n} p26={r.p26_value} predicted={r.predicted} "
                f"[{state}] consistent={r.consistent}"
            )
        lines.append(f"summary: {len(gated)}/{len(reports)} gated, "
                     f"{len(bad)} violations")
        _emit(lines)
    if bad:
        sys.stderr.write(
            f"red flag: biconditional violated at n={[r.profile.n for r in bad]}\n"
        )
        return EXIT_RED_FLAG
    return EXIT_OK


def _cmd_selftest(args: argparse.Namespace) -> int:
    failures = 0

    def check(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        line = f"selftest {name}: {'ok' if ok else 'FAIL'}"
        if detail and not ok:
            line += f"  ({detail})"
        print(line)
        if not ok:
            failures += 1

    check("t2(5) = 20592", t2_prime(5) == 20592)
    check("t1(7) = -102960*sqrt(-3)", t1_prime(7) == AlgInt3(0, -102960))
    euler = series.eta_power_series(1, 26, args.budget_mb)
    check("euler prefix", euler.coeffs == _EULER_PREFIX)
    jacobi = series.eta_power_series(3, 21, args.budget_mb)
    check("jacobi prefix", jacobi.coeffs == _JACOBI_PREFIX)
    table = series.eta_power_series(26, args.limit, args.budget_mb)
    mismatch = [n for n in range(args.limit + 1) if p26_cm(n) != table[n]]
    check(f"cm = series on [0, {args.limit}]", not mismatch,
          f"first mismatch at n={mismatch[0]}" if mismatch else "")
    for rep in props.run_all(args.prime_bound, args.exp_bound, args.l_bound):
        check(f"props {rep.prop_id}", rep.ok, f"{len(rep.failures)} failures")
    _, summary = classify.scan(0, min(args.limit, 200))
    check("no unexplained zeros", not summary.unexplained_zeros)
    return EXIT_RED_FLAG if failures else EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="eta26", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="one coefficient, by either or both paths")
    p.add_argument("n", type=int)
    p.add_argument("--r", type=int, default=26, help="series exponent (default 26)")
    p.add_argument("--method", choices=("cm", "series", "both"), default=None,
                   help="cm (default for r=26), series, or both (reconcile)")
    p.add_argument("--budget-mb", type=int, default=series.DEFAULT_BUDGET_MB)
    _add_output_flag(p)
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("classify", help="condition profile and verdict for one n")
    p.add_argument("n", type=int)
    _add_output_flag(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("scan", help="classify a whole range and summarize zeros")
    p.add_argument("start", type=int)
    p.add_argument("end", type=int)
    _add_output_flag(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify-props", help="run the batch verifiers")
    p.add_argument("--prime-bound", type=int, default=props.DEFAULT_PRIME_BOUND)
    p.add_argument("--exp-bound", type=int, default=props.DEFAULT_EXPONENT_BOUND)
    p.add_argument("--l-bound", type=int, default=props.DEFAULT_L_BOUND)
    _add_output_flag(p)
    p.set_defaults(func=_cmd_verify_props)

    p = sub.add_parser("mt-check",
                       help="vanishing biconditionals for 25n+1 / 49n+3")
    p.add_argument("family", type=int, choices=(25, 49))
    p.add_argument("start", type=int)
    p.add_argument("end", type=int)
    _add_output_flag(p)
    p.set_defaults(func=_cmd_mt_check)

    p = sub.add_parser("selftest", help="vectors, cm/series sweep, verifiers")
    p.add_argument("--limit", type=int, default=500,
                   help="cm/series reconciliation range (default 500)")
    p.add_argument("--prime-bound", type=int, default=props.DEFAULT_PRIME_BOUND)
    p.add_argument("--exp-bound", type=int, default=props.DEFAULT_EXPONENT_BOUND)
    p.add_argument("--l-bound", type=int, default=props.DEFAULT_L_BOUND)
    p.add_argument("--budget-mb", type=int, default=series.DEFAULT_BUDGET_MB)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n{parser.format_usage()}")
        return EXIT_USAGE
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n{parser.format_usage()}")
        return EXIT_USAGE
    except BudgetError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ConsistencyError as exc:
        sys.stderr.write(f"red flag: {exc}\n")
        return EXIT_RED_FLAG
    except Eta26Error as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
