"""Command-line front end.

Subcommands:
    check <f> <g>      decide equivalence; exit 0 equivalent, 1 not, 2 bad input
    normalize <f>      print the canonical internal form of a formula
    batch <file>       check `lhs == rhs` lines, verify expect annotations
    bench ...          time a benchmark family and fit a scaling exponent
"""

from __future__ import annotations

import argparse
import sys

from .bench import FAMILIES, report_tsv, run_bench
from .dag import Arena, print_term
from .normalize import Session
from .syntax import ParseError, parse, to_internal

__all__ = ["main"]

EXIT_EQUIVALENT = 0
EXIT_DIFFERENT = 1
EXIT_ERROR = 2


def _parse_or_report(text: str, label: str) -> "object | None":
    try:
        return parse(text)
    except ParseError as exc:
        print(f"error: {label}: {exc.message} at bytes {exc.span.start}..{exc.span.end}", file=sys.stderr)
        return None


def _cmd_check(args) -> int:
    lhs = _parse_or_report(args.lhs, "left formula")
    rhs = _parse_or_report(args.rhs, "right formula")
    if lhs is None or rhs is None:
        return EXIT_ERROR
    arena = Arena()
    session = Session(arena)
    same = session.equivalent(to_internal(lhs, arena), to_internal(rhs, arena))
    print("equivalent" if same else "not-equivalent")
    return EXIT_EQUIVALENT if same else EXIT_DIFFERENT


def _cmd_normalize(args) -> int:
    f = _parse_or_report(args.formula, "formula")
    if f is None:
        return EXIT_ERROR
    arena = Arena()
    session = Session(arena)
    code = session.normalize(to_internal(f, arena))
    print(print_term(arena, session.extract_normal_form(code)))
    return 0


def _split_batch_line(line: str) -> tuple[str, str, str | None] | None:
    """(lhs, rhs, expect) of a payload line, or None for blank/comment."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    expect = None
    if "#" in stripped:
        stripped, _, comment = stripped.partition("#")
        comment = comment.strip()
        if comment.startswith("expect:"):
            expect = comment[len("expect:") :].strip()
        stripped = stripped.strip()
    parts = stripped.split("==")
    if len(parts) != 2:
        raise ValueError("expected exactly one '==' separator")
    if expect is not None and expect not in ("eq", "neq"):
        raise ValueError(f"bad expectation {expect!r} (use eq or neq)")
    return parts[0].strip(), parts[1].strip(), expect


def _cmd_batch(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    arena = Arena()
    session = Session(arena)
    checked = equivalent_count = violations = errors = 0
    for lineno, raw in enumerate(lines, start=1):
        try:
            payload = _split_batch_line(raw)
        except ValueError as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            errors += 1
            continue
        if payload is None:
            continue
        lhs_text, rhs_text, expect = payload
        try:
            lhs = parse(lhs_text)
            rhs = parse(rhs_text)
        except ParseError as exc:
            print(f"error: line {lineno}: {exc.message} at bytes {exc.span.start}..{exc.span.end}", file=sys.stderr)
            errors += 1
            continue
        same = session.equivalent(to_internal(lhs, arena), to_internal(rhs, arena))
        checked += 1
        equivalent_count += same
        verdict = "equivalent" if same else "not-equivalent"
        note = ""
        if expect is not None and (expect == "eq") != same:
            violations += 1
            note = f"  [VIOLATION: expected {expect}]"
        print(f"line {lineno}: {verdict}{note}")
    print(f"{checked} checked, {equivalent_count} equivalent, {violations} violations, {errors} errors")
    if errors:
        return EXIT_ERROR
    return EXIT_DIFFERENT if violations else 0


def _cmd_bench(args) -> int:
    if args.min_exp > args.max_exp:
        print("error: --min-exp must not exceed --max-exp", file=sys.stderr)
        return EXIT_ERROR
    report = run_bench(
        args.family,
        range(args.min_exp, args.max_exp + 1),
        reps=args.reps,
        size_scheduling=not args.no_size_scheduling,
    )
    sys.stdout.write(report_tsv(report))
    mode = "stored-order" if args.no_size_scheduling else "smallest-first"
    print(
        f"{report.family} ({mode}): sizes {report.sizes[0]}..{report.sizes[-1]}, "
        f"fitted exponent {report.fitted_exponent:.3f}",
        file=sys.stderr,
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ocbsl",
        description="Equivalence of and/or/not formulas up to distributivity, in quasilinear time.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether two formulas are equivalent")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("normalize", help="print the canonical internal form")
    p.add_argument("formula")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("batch", help="check a file of `lhs == rhs` lines")
    p.add_argument("path")
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("bench", help="measure scaling on a benchmark family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--min-exp", type=int, required=True, help="smallest size as a power of two")
    p.add_argument("--max-exp", type=int, required=True, help="largest size as a power of two")
    p.add_argument("--reps", type=int, default=5, help="repetitions per size (median is kept)")
    p.add_argument("--no-size-scheduling", action="store_true", help="normalize children in stored order")
    p.set_defaults(func=_cmd_bench)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches the contract
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
