"""
Exhaustive small-size checks of every sortability result the package models.

Each claim returns ``(ok, detail)``. ``run_all`` prints one PASS/FAIL line per
claim and, for failures, a shell command that reproduces the offending case.
"""
from __future__ import annotations

import contextlib
import io
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from . import greedy
from .constructions import (
    growth_slots,
    insert_max,
    left_fail_family,
    lower_bound,
    lower_bound_family,
    right_fail_family,
    superpattern_family,
)
from .enumeration import Decider, closure_violations, count_sortable, sortable_set
from .oracle import is_sortable, replay, sortable
from .perm import all_permutations, contains_pattern, render

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


@dataclass(frozen=True)
class Claim:
    key: str
    title: str
    check: Callable[[], tuple[bool, str]]
    repro: str


def _perms_upto(n_max: int, n_min: int = 1) -> Iterable[tuple[int, ...]]:
    for n in range(n_min, n_max + 1):
        yield from all_permutations(n)


def _first_bad(pred, cases) -> str | None:
    for case in cases:
        if not pred(*case):
            return " / ".join(render(c) if isinstance(c, tuple) else str(c) for c in case)
    return None


def _left(p, t):
    return greedy.greedy_sorts(p, t, "left")


def _right(p, t):
    return greedy.greedy_sorts(p, t, "right")


def figure_one() -> tuple[bool, str]:
    bad = []
    for pri in ("left", "right"):
        if not greedy.run_greedy((4, 1, 3, 2), 1, pri).sorted:
            bad.append(f"4 1 3 2 not sorted by {pri}")
        if greedy.run_greedy((2, 3, 1), 1, pri).sorted:
            bad.append(f"2 3 1 sorted by {pri}")
    return not bad, "; ".join(bad) or "4132 sorts, 231 fails, t=1 both priorities"


def west_equivalence(n_max: int = 8) -> tuple[bool, str]:
    cases = ((p, t) for t in (1, 2, 3) for p in _perms_upto(n_max))
    bad = _first_bad(lambda p, t: _right(p, t) == greedy.west_t_stack_sortable(p, t), cases)
    return bad is None, bad or f"right-greedy == west for n<={n_max}, t=1..3"


def right_subset_left(n_max: int = 8) -> tuple[bool, str]:
    cases = ((p, t) for t in (1, 2, 3) for p in _perms_upto(n_max))
    bad = _first_bad(lambda p, t: not _right(p, t) or _left(p, t), cases)
    return bad is None, bad or f"right-greedy set within left-greedy set for n<={n_max}, t=1..3"


def dominance(n_max: int = 7) -> tuple[bool, str]:
    cases = ((p, t) for t in (1, 2, 3, 4) for p in _perms_upto(n_max))
    bad = _first_bad(greedy.dominance_check, cases)
    return bad is None, bad or f"dominance holds for n<={n_max}, t=1..4"


def named_examples() -> tuple[bool, str]:
    run = greedy.run_greedy
    checks: list[tuple[str, bool]] = [
        ("3241 left-2 sorts", run((3, 2, 4, 1), 2, "left").sorted),
        ("3241 right-2 fails", not run((3, 2, 4, 1), 2, "right").sorted),
        ("6372451 right-3 sorts", run((6, 3, 7, 2, 4, 5, 1), 3, "right").sorted),
        ("68372451 right-3 fails", not run((6, 8, 3, 7, 2, 4, 5, 1), 3, "right").sorted),
    ]
    for t in (2, 3, 4):
        p = right_fail_family(t)
        checks.append((f"{render(p)} left-2 sorts", run(p, 2, "left").sorted))
        checks.append((f"{render(p)} right-{t} fails", not run(p, t, "right").sorted))
    bad_left = run((2, 5, 4, 1, 6, 7, 3), 3, "left")
    checks.append(("2541673 left-3 fails", not bad_left.sorted))
    checks.append(("2541673 left-3 blocked value is 7",
                   bad_left.failure is not None and bad_left.failure.blocked == 7))
    w = sortable((2, 5, 4, 1, 6, 7, 3), 3)
    checks.append(("2541673 oracle-3 sortable", w is not None and bool(replay((2, 5, 4, 1, 6, 7, 3), 3, w))))
    checks.append(("26351784 left-3 sorts", run((2, 6, 3, 5, 1, 7, 8, 4), 3, "left").sorted))
    checks.append(("26351784 contains 2541673",
                   contains_pattern((2, 6, 3, 5, 1, 7, 8, 4), (2, 5, 4, 1, 6, 7, 3))))
    failed = [name for name, ok in checks if not ok]
    return not failed, "FAILED: " + ", ".join(failed) if failed else f"{len(checks)} example checks"


def named_families(ts: Iterable[int] = (3, 4, 5)) -> tuple[bool, str]:
    failed = []
    for t in ts:
        lf, sp = left_fail_family(t), superpattern_family(t)
        fail = greedy.run_greedy(lf, t, "left").failure
        if fail is None or fail.blocked != t + 4:
            failed.append(f"left-greedy on {render(lf)} t={t} does not block at {t + 4}")
        if not is_sortable(lf, t):
            failed.append(f"{render(lf)} not oracle-{t} sortable")
        if not greedy.run_greedy(sp, t, "left").sorted:
            failed.append(f"{render(sp)} not left-{t} sortable")
        if not contains_pattern(sp, lf):
            failed.append(f"{render(sp)} does not contain {render(lf)}")
    return not failed, "; ".join(failed) or f"families hold for t in {tuple(ts)}"


def optimality(n_max: int = 8) -> tuple[bool, str]:
    problems = []
    for t in (1, 2):
        for n in range(1, n_max + 1):
            left = sortable_set(n, Decider("greedy-left", t))
            orc = sortable_set(n, Decider("oracle", t))
            if left != orc:
                problems.append(f"left != oracle at n={n}, t={t}")
            if t == 1:
                avoid = [p for p in all_permutations(n) if not contains_pattern(p, (2, 3, 1))]
                if left != avoid:
                    problems.append(f"t=1 set != 231-avoiders at n={n}")
                if len(left) != CATALAN[n]:
                    problems.append(f"t=1 count {len(left)} != {CATALAN[n]} at n={n}")
    return not problems, "; ".join(problems) or f"left == oracle for t=1,2, n<={n_max}; Catalan counts"


def insertion(base_max: int = 6) -> tuple[bool, str]:
    memo: dict = {}

    def orc(p, t):
        key = (p, t)
        if key not in memo:
            memo[key] = is_sortable(p, t)
        return memo[key]

    problems = []
    for t in (2, 3):
        for base in _perms_upto(base_max, 0):
            m = len(base)
            all_slots = range(1, m + 2)
            grow = growth_slots(m, t)
            if _left(base, t - 1):
                for s in all_slots:
                    if not _left(insert_max(base, s), t):
                        problems.append(f"left any-slot insertion t={t}: {render(base)} slot {s}")
            if orc(base, t - 1):
                for s in all_slots:
                    if not orc(insert_max(base, s), t):
                        problems.append(f"oracle any-slot insertion t={t}: {render(base)} slot {s}")
            if _left(base, t):
                for s in grow:
                    if not _left(insert_max(base, s), t):
                        problems.append(f"left first-t-or-last t={t}: {render(base)} slot {s}")
            if orc(base, t):
                for s in grow:
                    if not orc(insert_max(base, s), t):
                        problems.append(f"oracle first-t-or-last t={t}: {render(base)} slot {s}")
    return not problems, "; ".join(problems[:5]) or f"zero violations, bases of length <= {base_max}"


def lower_bound_claim(n_max: int = 8) -> tuple[bool, str]:
    problems = []
    for t in (2, 3):
        for n in range(t, n_max + 1):
            bound = lower_bound(n, t)
            if n >= t + 1:
                fam = list(lower_bound_family(n, t))
                if len(fam) != bound or len(set(fam)) != bound:
                    problems.append(f"family size {len(fam)}/{len(set(fam))} != {bound} at n={n}, t={t}")
                if not all(_left(p, t) for p in fam):
                    problems.append(f"family member not left-{t} sortable at n={n}")
            count = count_sortable(n, t, Decider("greedy-left", t)).count
            if count < bound:
                problems.append(f"count {count} < {bound} at n={n}, t={t}")
    return not problems, "; ".join(problems) or f"bound met for t=2,3, n<={n_max}"


def pruning(n_max: int = 7) -> tuple[bool, str]:
    cases = ((p, t) for t in (1, 2, 3) for p in _perms_upto(n_max))
    bad = _first_bad(lambda p, t: is_sortable(p, t) == is_sortable(p, t, "no-empty-gap"), cases)
    return bad is None, bad or f"pruned oracle agrees for n<={n_max}, t=1..3"


def closed_class(n_max: int = 7) -> tuple[bool, str]:
    problems = []
    for n in range(1, n_max + 1):
        v = closure_violations(n, 2, Decider("greedy-left", 2))
        if v:
            problems.append(f"t=2 violation {render(v[0][0])} -> {render(v[0][1])}")
    sp, lf = (2, 6, 3, 5, 1, 7, 8, 4), (2, 5, 4, 1, 6, 7, 3)
    v = closure_violations(8, 3, Decider("greedy-left", 3), perms=[sp])
    if (sp, lf) not in v:
        problems.append("t=3 pair (26351784, 2541673) not reported")
    return not problems, "; ".join(problems) or f"t=2 closed for n<={n_max}; t=3 violation found"


def parallel_stability() -> tuple[bool, str]:
    from .cli import main

    outs = []
    for workers in (1, 8):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(["count", "--stacks", "2", "--len", "8", "--algo", "left",
                         "--workers", str(workers)])
        outs.append((code, buf.getvalue()))
    ok = outs[0] == outs[1] and outs[0][0] == 0
    return ok, outs[0][1].strip().replace("\n", " | ") if ok else f"outputs differ: {outs!r}"


CLAIMS: list[Claim] = [
    Claim("figure-1", "4132 sorts on one stack, 231 does not", figure_one,
          'tstacks trace --stacks 1 --algo left "4 1 3 2"'),
    Claim("west-equivalence", "right-greedy sorts exactly the West t-stack-sortable set",
          west_equivalence, "tstacks compare --stacks 2 --len 8 --algo right,west"),
    Claim("right-within-left", "right-greedy sortable implies left-greedy sortable",
          right_subset_left, "tstacks compare --stacks 3 --len 8 --algo left,right"),
    Claim("dominance", "left-greedy is never behind right-greedy at a critical moment",
          dominance, "python -c 'from tstacks.verify import dominance; print(dominance())'"),
    Claim("named-examples", "the worked examples behave as stated", named_examples,
          'tstacks check --stacks 2 --algo left "3 2 4 1"'),
    Claim("named-families", "non-optimality families for t=3..5", named_families,
          "tstacks generate left-fail --stacks 4"),
    Claim("optimality", "left-greedy is optimal for t<=2; t=1 gives Catalan counts",
          optimality, "tstacks compare --stacks 2 --len 8 --algo left,oracle"),
    Claim("insertion", "max insertion into any slot with one more stack, or into the first t slots or last",
          insertion,
          "python -c 'from tstacks.verify import insertion; print(insertion())'"),
    Claim("lower-bound", "at least t!(t+1)^(n-t) left-greedy sortable permutations", lower_bound_claim,
          "tstacks generate lower-bound --stacks 2 --len 6"),
    Claim("empty-stack", "no-empty-gap pruning keeps the oracle verdict", pruning,
          'tstacks check --stacks 3 --algo oracle --prune "2 5 4 1 6 7 3"'),
    Claim("closed-class", "t=2 left-greedy class is deletion-closed; t=3 is not", closed_class,
          'tstacks contains "2 6 3 5 1 7 8 4" "2 5 4 1 6 7 3"'),
    Claim("parallel-stability", "count output identical for 1 and 8 workers",
          parallel_stability, "tstacks count --stacks 2 --len 8 --algo left --workers 8"),
]


def run_claim(claim: Claim) -> tuple[bool, str, float]:
    start = time.perf_counter()
    try:
        ok, detail = claim.check()
    except Exception as exc:  # a crashing claim is a failing claim
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return ok, detail, time.perf_counter() - start


def format_line(claim: Claim, ok: bool, detail: str, seconds: float) -> str:
    line = f"{'PASS' if ok else 'FAIL'} {claim.key}: {claim.title} ({detail}) [{seconds:.1f}s]"
    if not ok:
        line += f"\n     reproduce: {claim.repro}"
    return line


def run_all(claims: Iterable[Claim] = CLAIMS, out=print) -> bool:
    all_ok = True
    for claim in claims:
        ok, detail, secs = run_claim(claim)
        out(format_line(claim, ok, detail, secs))
        all_ok &= ok
    return all_ok
