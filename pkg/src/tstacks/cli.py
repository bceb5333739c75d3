"""
Command-line front end.

Exit codes: 0 true/sorted, 1 false/failed, 2 usage or parse error,
3 resource limit or infeasible size.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import constructions, greedy, machine
from .enumeration import (
    Decider,
    InfeasibleError,
    closure_violations,
    count_sortable,
    default_workers,
    diff_sets,
    diff_to_json,
    diff_to_text,
    rows_to_csv,
    rows_to_json,
)
from .oracle import SearchLimitExceeded, sortable
from .perm import PermutationError, contains_pattern, parse_permutation, render

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def _perm_arg(parts: list[str]):
    return parse_permutation(" ".join(parts))


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_trace(args) -> int:
    p = _perm_arg(args.perm)
    outcome = greedy.run_greedy(p, args.stacks, args.algo)
    if args.pretty:
        print(f"step 0: {machine.pretty(machine.initial_state(p, args.stacks))}")
        for step, (m, v, s) in enumerate(machine.replay_states(p, args.stacks, outcome.moves), start=1):
            print(f"step {step}: {str(m):<11} {v:>3}  {machine.pretty(s)}")
        summary = outcome.summary()
        verdict = "sorted" if outcome.sorted else \
            f"stuck: {summary['blocked']} cannot enter above {summary['gamma']}"
        print(verdict)
    else:
        for event in outcome.trace(p, args.stacks):
            _emit(event)
        _emit(outcome.summary())
    return EXIT_TRUE if outcome.sorted else EXIT_FALSE


def cmd_check(args) -> int:
    p = _perm_arg(args.perm)
    t = args.stacks
    if args.algo == "oracle":
        w = sortable(p, t, "no-empty-gap" if args.prune else "none")
        ok = w is not None
        print("sortable" if ok else "not sortable")
        if ok and args.witness:
            print(w.to_json(p, t))
        return EXIT_TRUE if ok else EXIT_FALSE
    if args.prune or args.witness:
        raise UsageError("--prune and --witness apply only to --algo oracle")
    if args.algo == "west":
        ok = greedy.west_t_stack_sortable(p, t)
    else:
        ok = greedy.run_greedy(p, t, args.algo).sorted
    print("sortable" if ok else "not sortable")
    return EXIT_TRUE if ok else EXIT_FALSE


def _algos(text: str, t: int) -> list[Decider]:
    try:
        return [Decider.from_algo(a.strip(), t) for a in text.split(",") if a.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_count(args) -> int:
    rows = [count_sortable(args.len, args.stacks, d, workers=args.workers)
            for d in _algos(args.algo, args.stacks)]
    sys.stdout.write(rows_to_json(rows) if args.format == "json" else rows_to_csv(rows))
    return EXIT_TRUE


def cmd_compare(args) -> int:
    ds = _algos(args.algo, args.stacks)
    if len(ds) != 2:
        raise UsageError("compare needs exactly two algorithms, e.g. --algo left,right")
    a, b = ds
    diff = diff_sets(args.len, args.stacks, a, b, workers=args.workers)
    fmt = diff_to_json if args.format == "json" else diff_to_text
    sys.stdout.write(fmt(diff, a.name, b.name))
    return EXIT_TRUE


def cmd_closure(args) -> int:
    ds = _algos(args.algo, args.stacks)
    if len(ds) != 1:
        raise UsageError("closure takes exactly one algorithm")
    d = ds[0]
    perms = [_perm_arg([args.perm])] if args.perm else None
    n = len(perms[0]) if perms else args.len
    if n is None:
        raise UsageError("closure needs --len or a permutation")
    pairs = closure_violations(n, args.stacks, d, perms=perms, workers=args.workers)
    for p, q in pairs:
        print(f"{render(p)} -> {render(q)}")
    return EXIT_TRUE if not pairs else EXIT_FALSE


def cmd_generate(args) -> int:
    t = args.stacks
    if t is None and args.family != "insert":
        raise UsageError(f"{args.family} needs --stacks")
    try:
        if args.family == "right-fail":
            out = [constructions.right_fail_family(t)]
        elif args.family == "left-fail":
            out = [constructions.left_fail_family(t)]
        elif args.family == "superpattern":
            out = [constructions.superpattern_family(t)]
        elif args.family == "lower-bound":
            if args.len is None:
                raise UsageError("lower-bound needs --len")
            out = constructions.lower_bound_family(args.len, t)
        else:
            if args.slot is None or args.base is None:
                raise UsageError("insert needs --slot and --base")
            out = [constructions.insert_max(parse_permutation(args.base), args.slot)]
        for p in out:
            print(render(p))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_TRUE


def cmd_contains(args) -> int:
    p, q = parse_permutation(args.perm), parse_permutation(args.pattern)
    ok = contains_pattern(p, q)
    print("contains" if ok else "avoids")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_verify_paper(args) -> int:
    from .verify import CLAIMS, run_all

    claims = [c for c in CLAIMS if not args.only or c.key in args.only]
    ok = run_all(claims, out=lambda line: print(line, flush=True))
    return EXIT_TRUE if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tstacks", description="Sorting with t stacks in series.")
    sub = parser.add_subparsers(dest="command", required=True)

    def stacks(sp, required=True):
        sp.add_argument("--stacks", "-t", type=_positive, required=required, help="number of stacks in series")

    sp = sub.add_parser("trace", help="trace a greedy run as JSON lines")
    stacks(sp)
    sp.add_argument("--algo", choices=["left", "right"], required=True)
    sp.add_argument("--pretty", action="store_true", help="ASCII stack pictures instead of JSON")
    sp.add_argument("perm", nargs="+")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("check", help="decide sortability of one permutation")
    stacks(sp)
    sp.add_argument("--algo", choices=["left", "right", "west", "oracle"], required=True)
    sp.add_argument("--prune", action="store_true", help="oracle: refuse pushes that leave an empty gap")
    sp.add_argument("--witness", action="store_true", help="oracle: print the witness move sequence")
    sp.add_argument("perm", nargs="+")
    sp.set_defaults(func=cmd_check)

    workers_help = "worker processes (default: $TSTACKS_WORKERS or 1)"
    sp = sub.add_parser("count", help="count sortable permutations of a length")
    stacks(sp)
    sp.add_argument("--len", "-n", type=_nonneg, required=True)
    sp.add_argument("--algo", required=True, help="comma-separated: left,right,west,oracle")
    sp.add_argument("--workers", type=_positive, default=None, help=workers_help)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("compare", help="set difference of two deciders")
    stacks(sp)
    sp.add_argument("--len", "-n", type=_nonneg, required=True)
    sp.add_argument("--algo", required=True, help="two algorithms, e.g. left,right")
    sp.add_argument("--workers", type=_positive, default=None, help=workers_help)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("closure", help="sortable permutations with an unsortable one-entry deletion")
    stacks(sp)
    sp.add_argument("--len", "-n", type=_nonneg)
    sp.add_argument("--algo", required=True)
    sp.add_argument("--workers", type=_positive, default=None, help=workers_help)
    sp.add_argument("perm", nargs="?", help="restrict the scan to this permutation")
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("generate", help="emit named permutations and families")
    sp.add_argument("family", choices=["right-fail", "left-fail", "superpattern", "lower-bound", "insert"])
    stacks(sp, required=False)
    sp.add_argument("--len", "-n", type=_nonneg)
    sp.add_argument("--slot", type=_positive, help="insert: 1-based slot for the new maximum")
    sp.add_argument("--base", help="insert: base permutation, e.g. \"3 2 1\"")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("contains", help="pattern containment test")
    sp.add_argument("perm")
    sp.add_argument("pattern")
    sp.set_defaults(func=cmd_contains)

    sp = sub.add_parser("verify-paper", help="run every exhaustive claim check")
    sp.add_argument("--only", action="append", help="run only this claim key (repeatable)")
    sp.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    if getattr(args, "workers", "absent") is None:
        args.workers = default_workers()
    try:
        return args.func(args)
    except (UsageError, PermutationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchLimitExceeded, InfeasibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
