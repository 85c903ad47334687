"""Command-line interface.

Exit codes: detect/check report with 0 (detect uses 1 when no backdoor
fits the budget); eval/solve/enumerate use the SAT-competition style
10 = extension exists, 20 = no extension; 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from dlbackdoor import cnf
from dlbackdoor.brute import DEFAULT_RULE_LIMIT, enumerate_extensions
from dlbackdoor.checking import check_extension
from dlbackdoor.defaults import generated_candidate
from dlbackdoor.detect import detect_backdoor, negative_variables
from dlbackdoor.entailment import BackdoorMisuseError
from dlbackdoor.evaluate import (
    EXTENSION_EXISTS,
    OverBudgetError,
    evaluate_backdoor,
    solve,
)
from dlbackdoor.gen import random_theory
from dlbackdoor.ioformat import TheoryParseError, parse_theory, render_theory

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_ERROR = 2
EXIT_EXISTS = 10
EXIT_NO_EXTENSION = 20

CLASSES = list(cnf.ALL_CLASSES)


def _read_theory(path: str):
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return parse_theory(text)


def _int_list(text: str, what: str):
    if not text.strip():
        return []
    try:
        values = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated list of integers")
    if what == "backdoor" and any(v <= 0 for v in values):
        raise ValueError("variable ids must be positive")
    return values


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _witness_lines(report):
    lines = []
    if report.witness is not None:
        gen = ",".join(str(i) for i in sorted(report.witness.generating))
        lines.append(f"witness generating: {gen if gen else '(none)'}")
    return lines


def cmd_detect(args) -> int:
    theory = _read_theory(args.theory).remove_tautologies()
    backdoor = detect_backdoor(theory, args.formula_class, args.k)
    if backdoor is None:
        payload = {"backdoor": None, "class": args.formula_class, "k": args.k}
        lines = [f"no {args.formula_class} backdoor of size <= {args.k}"]
        if args.formula_class == cnf.CLASS_MONOTONE:
            minimum = len(negative_variables(theory))
            payload["minimum_size"] = minimum
            lines.append(f"minimum monotone backdoor size: {minimum}")
        _emit(args, payload, lines)
        return EXIT_NOT_FOUND
    listed = " ".join(str(v) for v in sorted(backdoor))
    _emit(
        args,
        {"backdoor": sorted(backdoor), "class": args.formula_class, "k": args.k},
        [f"backdoor: {listed}" if listed else "backdoor: (empty)"],
    )
    return EXIT_OK


def cmd_eval(args) -> int:
    theory = _read_theory(args.theory).remove_tautologies()
    backdoor = frozenset(_int_list(args.backdoor, "backdoor"))
    report = evaluate_backdoor(
        theory, backdoor, args.formula_class, oracle=args.oracle, find_all=args.all
    )
    _emit(args, report.to_json_dict(), [report.answer] + _witness_lines(report))
    return EXIT_EXISTS if report.answer == EXTENSION_EXISTS else EXIT_NO_EXTENSION


def cmd_check(args) -> int:
    theory = _read_theory(args.theory).remove_tautologies()
    generating = _int_list(args.generating, "generating")
    candidate = generated_candidate(theory, generating)
    verdict = check_extension(theory, candidate, args.oracle)
    _emit(
        args,
        {"stable_extension": verdict, "generating": sorted(generating)},
        [f"stable-extension: {'yes' if verdict else 'no'}"],
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    theory = _read_theory(args.theory).remove_tautologies()
    extensions = enumerate_extensions(theory, args.limit)
    lines = [f"{len(extensions)} extensions"]
    for ext in extensions:
        gen = ",".join(str(i) for i in sorted(ext.generating))
        lines.append(f"generating: {gen if gen else '(none)'}")
    _emit(
        args,
        {
            "count": len(extensions),
            "extensions": [sorted(ext.generating) for ext in extensions],
        },
        lines,
    )
    return EXIT_EXISTS if extensions else EXIT_NO_EXTENSION


def cmd_solve(args) -> int:
    theory = _read_theory(args.theory)
    report = solve(
        theory,
        args.formula_class,
        args.k,
        oracle=args.oracle,
        limit=args.limit,
        find_all=args.all,
    )
    _emit(args, report.to_json_dict(), [report.answer] + _witness_lines(report))
    return EXIT_EXISTS if report.answer == EXTENSION_EXISTS else EXIT_NO_EXTENSION


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    theory = random_theory(rng, args.vars, args.rules, args.clauses, args.lits)
    sys.stdout.write(render_theory(theory))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlbackdoor",
        description="Stable-extension existence for default theories via strong backdoors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_class=False):
        p.add_argument("theory", help="theory file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        if with_class:
            p.add_argument(
                "--class",
                dest="formula_class",
                choices=CLASSES,
                required=True,
                help="target formula class",
            )

    p = sub.add_parser("detect", help="find a strong backdoor of size <= k")
    add_common(p, with_class=True)
    p.add_argument("-k", type=int, required=True, help="backdoor size budget")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("eval", help="evaluate a given strong backdoor")
    add_common(p, with_class=True)
    p.add_argument("--backdoor", required=True, help="comma-separated variable ids")
    p.add_argument("--oracle", choices=["general", "backdoor", "auto"], default="general")
    p.add_argument("--all", action="store_true", help="collect every verified witness")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="check one generating set for stability")
    add_common(p)
    p.add_argument("--generating", default="", help="comma-separated rule indices")
    p.add_argument("--oracle", choices=["general", "auto"], default="auto")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="brute-force all consistent stable extensions")
    add_common(p)
    p.add_argument("--limit", type=int, default=DEFAULT_RULE_LIMIT, help="max rule count")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("solve", help="detect a backdoor, then evaluate it")
    add_common(p, with_class=True)
    p.add_argument("-k", type=int, required=True, help="backdoor size budget")
    p.add_argument("--oracle", choices=["general", "backdoor", "auto"], default="general")
    p.add_argument("--limit", type=int, default=DEFAULT_RULE_LIMIT, help="brute-force rule cap")
    p.add_argument("--all", action="store_true", help="collect every verified witness")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="emit a random theory")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vars", type=int, default=5)
    p.add_argument("--rules", type=int, default=4)
    p.add_argument("--clauses", type=int, default=2)
    p.add_argument("--lits", type=int, default=3)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TheoryParseError, BackdoorMisuseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OverBudgetError as exc:
        print(f"over budget: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND


if __name__ == "__main__":
    sys.exit(main())
