"""Command-line front end.

Commands: eval (direct series), reduce (closed form by id), verify (randomized
suite), catalog (list formulas).  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 numerical/domain-of-series error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import catalog, verifier
from .catalog import ReductionRequest
from .errors import DomainError, HyperreduceError
from .series import DEFAULT_MAX_TERMS, DEFAULT_TOL, PFQSpec, Status, eval_pfq

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

_MACHINE_FMT = "{:.17g}"
_HUMAN_FMT = "{:.10g}"


def _default_max_terms() -> int:
    raw = os.environ.get("HYPERREDUCE_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise SystemExit(
            f"HYPERREDUCE_MAX_TERMS must be a positive integer, got {raw!r}"
        ) from None
    return value


def _parse_float_list(raw: str) -> list[float]:
    raw = raw.strip()
    if not raw:
        return []
    return [float(part) for part in raw.split(",")]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperreduce",
        description=(
            "Evaluate generalized hypergeometric series, their closed-form "
            "reductions, and verify the two against each other."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="sum a pFq series directly")
    p_eval.add_argument("--upper", default="", help="comma-separated upper parameters")
    p_eval.add_argument("--lower", default="", help="comma-separated lower parameters")
    p_eval.add_argument("--z", type=float, required=True)
    p_eval.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_eval.add_argument("--max-terms", type=int, default=None)

    p_reduce = sub.add_parser("reduce", help="evaluate a named closed-form reduction")
    p_reduce.add_argument("id", help="reduction identifier (see `catalog`)")
    for name in ("a", "b", "c", "d"):
        p_reduce.add_argument(f"--{name}", default=None, help=f"parameter {name}")
    for name in ("n", "m", "k"):
        p_reduce.add_argument(f"--{name}", type=int, default=None, help=f"shift {name}")
    p_reduce.add_argument("--z", type=float, default=None)
    p_reduce.add_argument(
        "--check", action="store_true", help="also evaluate the series oracle"
    )

    p_verify = sub.add_parser("verify", help="run the randomized verification suite")
    p_verify.add_argument("--only", default=None, help="comma-separated entry ids")
    p_verify.add_argument("--cases", type=int, default=30)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p_verify.add_argument("--out", default=None, help="write the report to this path")

    p_catalog = sub.add_parser("catalog", help="list the reduction catalog")
    p_catalog.add_argument("--id", default=None, help="show one entry in detail")

    return parser


def _cmd_eval(args: argparse.Namespace) -> int:
    try:
        upper = _parse_float_list(args.upper)
        lower = _parse_float_list(args.lower)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.tol <= 0.0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    max_terms = args.max_terms if args.max_terms is not None else _default_max_terms()
    if max_terms < 1:
        print("error: --max-terms must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = eval_pfq(PFQSpec(upper, lower, args.z), max_terms=max_terms, tol=args.tol)
    except HyperreduceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    print("value       = " + _MACHINE_FMT.format(result.value))
    print("abs_err_est = " + _MACHINE_FMT.format(result.abs_err_est))
    print(f"terms_used  = {result.terms_used}")
    print(f"status      = {result.status.value}")
    if result.status is Status.MAX_TERMS_REACHED:
        print("error: series did not converge within the term cap", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def _request_from_args(args: argparse.Namespace) -> ReductionRequest:
    entry = catalog.get_entry(args.id)
    scalars: dict = {}
    for name in ("a", "b", "c", "d"):
        raw = getattr(args, name)
        if raw is None:
            continue
        if name in entry.list_names:
            scalars[name] = tuple(_parse_float_list(raw))
        else:
            scalars[name] = float(raw)
    shifts = {
        name: getattr(args, name)
        for name in ("n", "m", "k")
        if getattr(args, name) is not None
    }
    return ReductionRequest(args.id, scalars, shifts, args.z)


def _cmd_reduce(args: argparse.Namespace) -> int:
    try:
        request = _request_from_args(args)
        result = catalog.reduce(request)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HyperreduceError, OverflowError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    print("value       = " + _MACHINE_FMT.format(result.value))
    print("abs_err_est = " + _MACHINE_FMT.format(result.abs_err_est))
    if not args.check:
        return EXIT_OK
    entry = catalog.get_entry(args.id)
    oracle_tol = (
        verifier.ORACLE_TOL_UNITY if entry.unity else verifier.ORACLE_TOL_INTERIOR
    )
    tol_rel, tol_abs = (
        (verifier.UNITY_TOL_REL, verifier.UNITY_TOL_ABS)
        if entry.unity
        else (verifier.INTERIOR_TOL_REL, verifier.INTERIOR_TOL_ABS)
    )
    try:
        oracle = eval_pfq(
            catalog.lhs_spec(request), max_terms=_default_max_terms(), tol=oracle_tol
        )
    except (HyperreduceError, OverflowError) as exc:
        print(f"error: oracle failed: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    diff = abs(oracle.value - result.value)
    rel_err = diff / abs(oracle.value) if oracle.value != 0.0 else diff
    ok = diff <= max(tol_rel * abs(oracle.value), tol_abs)
    print("oracle      = " + _MACHINE_FMT.format(oracle.value))
    print("rel_err     = " + _MACHINE_FMT.format(rel_err))
    print(f"check       = {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _format_table(report: verifier.Report) -> str:
    lines = []
    header = f"{'id':<18} {'pass':>5} {'fail':>5} {'skip':>5} {'worst rel err':>14} {'time (s)':>9}"
    lines.append(header)
    lines.append("-" * len(header))
    for s in report.summaries:
        worst = _HUMAN_FMT.format(s.worst_rel_err) if s.worst_rel_err is not None else "-"
        lines.append(
            f"{s.entry_id:<18} {s.passed:>5} {s.failed:>5} {s.skipped:>5} "
            f"{worst:>14} {s.wall_time:>9.3f}"
        )
    lines.append(f"total failures: {report.total_failed}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.cases < 1:
        print("error: --cases must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    entries = None
    if args.only is not None:
        entries = [part.strip() for part in args.only.split(",") if part.strip()]
        if not entries:
            print("error: --only given but empty", file=sys.stderr)
            return EXIT_USAGE
        known = set(catalog.catalog_ids())
        unknown = [e for e in entries if e not in known]
        if unknown:
            print(f"error: unknown reduction ids {unknown}", file=sys.stderr)
            return EXIT_USAGE
    report = verifier.run_suite(entries, args.cases, args.seed)
    if args.format == "json":
        payload = {
            "summary": verifier.report_summary(report),
            "results": [verifier._result_row(r) for r in report.results],
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        text = verifier.report_to_csv(report)
    else:
        text = _format_table(report)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.total_failed == 0 else EXIT_VERIFY_FAIL


def _signature(entry: catalog.CatalogEntry) -> str:
    parts = []
    for name in entry.scalar_names:
        parts.append(f"{name}=<list>" if name in entry.list_names else f"{name}=<real>")
    for name in entry.shift_names:
        parts.append(f"{name}=<int>")
    if entry.fixed_z is not None:
        parts.append(f"z fixed at {entry.fixed_z:g}")
    else:
        parts.append("z=<real>")
    return ", ".join(parts)


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.id is not None:
        try:
            entry = catalog.get_entry(args.id)
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return EXIT_USAGE
        print(f"id:          {entry.id}")
        print(f"signature:   {_signature(entry)}")
        print(f"constraints: {entry.constraints}")
        print(f"description: {entry.description}")
        return EXIT_OK
    for entry_id in catalog.catalog_ids():
        entry = catalog.get_entry(entry_id)
        print(f"{entry.id:<18} {_signature(entry)}")
        print(f"{'':<18} constraints: {entry.constraints}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "reduce":
        return _cmd_reduce(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_catalog(args)


if __name__ == "__main__":
    sys.exit(main())
