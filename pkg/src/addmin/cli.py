"""Command-line interface.

Usage:
    addmin min FILE            enumerate minimal-solution cells
    addmin max FILE            enumerate maximal-solution cells
    addmin solvable FILE       exit 0 if solvable, 1 otherwise
    addmin check FILE --x V    classify a point
    addmin bound FILE --x V    minimal solution below / maximal above a solution
    addmin describe FILE       full solution-set description
    addmin oracle FILE --seed S --trials N
    addmin gen --seed S --m M --n N --step D

Exit codes: 0 ok, 1 unsolvable (``solvable``), 2 invalid input,
3 enumeration cap exceeded, 4 oracle counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import AddMinError, is_solution
from .document import instance_to_dict, load_instance, parse_vector
from .enumeration import (
    describe_solution_set,
    is_maximal,
    is_minimal,
    lower_corner,
    maximal_above,
    minimal_below,
    run_maximal,
    run_minimal,
)
from .grid import DEFAULT_MAX_CELLS, CapExceededError
from .oracle import random_solvable_instance, verify_description
from .render import cell_to_json, fmt, fmt_index, fmt_vector, format_cell, index_to_json

EXIT_OK, EXIT_UNSOLVABLE, EXIT_INVALID, EXIT_CAP, EXIT_COUNTEREXAMPLE = range(5)

SHORTCUT_TEXT = {
    "alpha_check_is_solution": "lower bound vector is a solution, hence the unique minimal solution",
    "all_ones_is_solution": "(1, ..., 1) is a solution, hence the unique maximal solution",
}


def _label(kind: str, index) -> str:
    return f"X{'min' if kind == 'min' else 'max'}{fmt_index(index)}"


def _run_to_text(run) -> list[str]:
    title = "minimal" if run.kind == "min" else "maximal"
    if run.precheck.infeasible:
        return [f"{title} solutions: none (precheck failed: {'; '.join(run.precheck.reasons)})"]
    if run.shortcut:
        return [f"{title} solutions: 1 cell (shortcut: {SHORTCUT_TEXT[run.shortcut]})",
                f"  {format_cell(run.cells[0])}"]
    lines = [f"{title} solutions: {len(run.cells)} nonempty of {len(run.outcomes)} subsystems"]
    for index, cell in run.outcomes:
        lines.append(f"  {_label(run.kind, index)} = {format_cell(cell) if cell else 'empty'}")
    return lines


def _run_to_json(run) -> dict:
    return {
        "kind": run.kind,
        "precheck": list(run.precheck.reasons),
        "shortcut": run.shortcut,
        "subsystems": len(run.outcomes),
        "cells": [cell_to_json(c) for c in run.cells],
        "empty": [index_to_json(i) for i, c in run.outcomes if c is None],
    }


def _emit(args, text_lines, payload) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def cmd_enumerate(args) -> int:
    instance = load_instance(args.file)
    run = (run_minimal if args.command == "min" else run_maximal)(instance, args.max_cells)
    _emit(args, _run_to_text(run), _run_to_json(run))
    return EXIT_OK


def cmd_solvable(args) -> int:
    instance = load_instance(args.file)
    run = run_minimal(instance, args.max_cells)
    solvable = bool(run.cells)
    if solvable:
        reason = ""
    elif run.precheck.infeasible:
        reason = "precheck failed: " + "; ".join(run.precheck.reasons)
    else:
        reason = "no minimal solution exists"
    text = [f"solvable: {'yes' if solvable else 'no'}" + (f" ({reason})" if reason else "")]
    _emit(args, text, {"solvable": solvable, "reason": reason or None, "precheck": list(run.precheck.reasons)})
    return EXIT_OK if solvable else EXIT_UNSOLVABLE


def cmd_check(args) -> int:
    instance = load_instance(args.file)
    x = parse_vector(args.x)
    sol = is_solution(instance, x)
    lo = is_minimal(instance, x) if sol else None
    hi = is_maximal(instance, x) if sol else None

    def yn(v):
        return "n/a" if v is None else ("yes" if v else "no")

    text = [f"solution: {yn(sol)}; minimal: {yn(lo)}; maximal: {yn(hi)}"]
    _emit(args, text, {"x": [fmt(v) for v in x], "solution": sol, "minimal": lo, "maximal": hi})
    return EXIT_OK


def cmd_bound(args) -> int:
    instance = load_instance(args.file)
    x = parse_vector(args.x)
    lo, hi = minimal_below(instance, x), maximal_above(instance, x)
    text = [f"minimal_below: {fmt_vector(lo)}", f"maximal_above: {fmt_vector(hi)}"]
    _emit(args, text, {"minimal_below": [fmt(v) for v in lo], "maximal_above": [fmt(v) for v in hi]})
    return EXIT_OK


def cmd_describe(args) -> int:
    instance = load_instance(args.file)
    desc = describe_solution_set(instance, args.max_cells)
    text = [f"solvable: {'yes' if desc.solvable else 'no'}"]
    if desc.minimal_run.precheck.infeasible:
        text.append("precheck failed: " + "; ".join(desc.minimal_run.precheck.reasons))
    text.append(f"minimal cells ({len(desc.minimal_cells)}):")
    text += [f"  {_label('min', c.index)} = {format_cell(c)}" for c in desc.minimal_cells]
    text.append(f"maximal cells ({len(desc.maximal_cells)}):")
    text += [f"  {_label('max', c.index)} = {format_cell(c)}" for c in desc.maximal_cells]
    intervals = []
    if desc.solvable:
        text.append("solution set = union of order intervals [x_min, x_max]:")
        for c in desc.maximal_cells:
            low = lower_corner(instance, c)
            if low.origin == c.origin:
                line = f"{format_cell(c)}  (minimal and maximal)"
            else:
                line = f"{format_cell(low)} ≤ x ≤ {format_cell(c)}"
            text.append(f"  {line}")
            intervals.append({"lower": cell_to_json(low), "upper": cell_to_json(c)})
    payload = {
        "solvable": desc.solvable,
        "shortcut": list(desc.shortcut),
        "precheck": list(desc.minimal_run.precheck.reasons),
        "minimal": [cell_to_json(c) for c in desc.minimal_cells],
        "maximal": [cell_to_json(c) for c in desc.maximal_cells],
        "intervals": intervals,
    }
    _emit(args, text, payload)
    return EXIT_OK


def cmd_oracle(args) -> int:
    instance = load_instance(args.file)
    desc = describe_solution_set(instance, args.max_cells)
    report = verify_description(instance, desc, seed=args.seed, trials=args.trials)
    _emit(args, report.lines(), {"checks": report.checks, "counterexamples": report.counterexamples})
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def cmd_gen(args) -> int:
    step = parse_vector(args.step)
    if len(step) != 1:
        raise AddMinError(f"--step takes one numeral, got {args.step!r}")
    instance, planted = random_solvable_instance(args.seed, args.m, args.n, step[0])
    doc = instance_to_dict(instance)
    doc = {
        "name": f"random-seed{args.seed}-{args.m}x{args.n}",
        "description": f"planted solution {fmt_vector(planted)}",
        **doc,
    }
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS,
                        help="cap on index tuples per enumeration (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="addmin", description="Exact solver for addition-min fuzzy relation equations."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func, help_ in (
        ("min", cmd_enumerate, "enumerate minimal-solution cells"),
        ("max", cmd_enumerate, "enumerate maximal-solution cells"),
        ("solvable", cmd_solvable, "decide solvability (exit 1 if unsolvable)"),
        ("describe", cmd_describe, "minimal and maximal cells plus order intervals"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        p.set_defaults(func=func)
    for name, func, help_ in (
        ("check", cmd_check, "classify a point as solution / minimal / maximal"),
        ("bound", cmd_bound, "minimal solution below and maximal solution above a solution"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        p.add_argument("--x", required=True, help='comma-separated numerals, e.g. "0.3,1,0.7"')
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", parents=[common], help="sample-based verification report")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="emit a random solvable instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--step", default="0.1")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (AddMinError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
