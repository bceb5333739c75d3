"""
Exhaustive counting and comparison of sortable permutations.

The n! permutations are split into contiguous lexicographic blocks (one per
two-value prefix) that are scanned independently, optionally in worker
processes, and merged in block order. Output never depends on the number of
workers.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

from .greedy import greedy_sorts, west_t_stack_sortable
from .oracle import is_sortable
from .perm import Perm, delete_at, render

KINDS = ("greedy-left", "greedy-right", "west", "oracle")
ALGO_ALIASES = {"left": "greedy-left", "right": "greedy-right", "west": "west", "oracle": "oracle"}
MAX_N = {"greedy-left": 10, "greedy-right": 10, "west": 10, "oracle": 8}

WORKERS_ENV = "TSTACKS_WORKERS"


class InfeasibleError(ValueError):
    """Requested size is beyond what a decider is allowed to scan."""


@dataclass(frozen=True)
class Decider:
    kind: str
    t: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown decider {self.kind!r}")
        if self.t < 1:
            raise ValueError(f"need at least one stack, got t={self.t}")

    @classmethod
    def from_algo(cls, algo: str, t: int) -> Decider:
        try:
            return cls(ALGO_ALIASES.get(algo, algo), t)
        except ValueError:
            raise ValueError(f"unknown algorithm {algo!r}") from None

    @property
    def name(self) -> str:
        return self.kind

    def __call__(self, p: Sequence[int]) -> bool:
        return decide(self.kind, self.t, p)


def decide(kind: str, t: int, p: Sequence[int]) -> bool:
    if kind == "greedy-left":
        return greedy_sorts(p, t, "left")
    if kind == "greedy-right":
        return greedy_sorts(p, t, "right")
    if kind == "west":
        return west_t_stack_sortable(p, t)
    return is_sortable(p, t)


@dataclass(frozen=True)
class CountRow:
    n: int
    t: int
    decider: str
    count: int


@dataclass(frozen=True)
class SetDiff:
    only_a: list[Perm]
    only_b: list[Perm]
    both: int


def default_workers() -> int:
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def check_feasible(n: int, d: Decider, max_n: int | None = None) -> None:
    limit = MAX_N[d.kind] if max_n is None else max_n
    if not 0 <= n <= limit:
        raise InfeasibleError(f"n={n} is outside the feasible range 0..{limit} for {d.kind}")


def blocks(n: int) -> list[tuple[int, ...]]:
    """Prefixes splitting S_n into contiguous lexicographic blocks."""
    return list(itertools.permutations(range(1, n + 1), min(2, n)))


def _block_perms(n: int, prefix: tuple[int, ...]) -> Iterable[Perm]:
    rest = [v for v in range(1, n + 1) if v not in prefix]
    for tail in itertools.permutations(rest):
        yield prefix + tail


def _count_block(args) -> int:
    kind, t, n, prefix = args
    return sum(1 for p in _block_perms(n, prefix) if decide(kind, t, p))


def _collect_block(args) -> list[Perm]:
    kind, t, n, prefix = args
    return [p for p in _block_perms(n, prefix) if decide(kind, t, p)]


def _map_blocks(fn: Callable, n: int, d: Decider, workers: int) -> list:
    jobs = [(d.kind, d.t, n, prefix) for prefix in blocks(n)]
    if workers <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves job order, so the merge is deterministic
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def count_sortable(n: int, t: int, d: Decider | str, *, workers: int | None = None,
                   max_n: int | None = None) -> CountRow:
    d = d if isinstance(d, Decider) else Decider.from_algo(d, t)
    check_feasible(n, d, max_n)
    count = sum(_map_blocks(_count_block, n, d, workers or default_workers()))
    if not 0 <= count <= math.factorial(n):
        raise ArithmeticError(f"count {count} outside 0..{n}!")
    return CountRow(n, t, d.name, count)


def sortable_set(n: int, d: Decider, *, workers: int | None = None,
                 max_n: int | None = None) -> list[Perm]:
    """All sortable permutations of length n, in lexicographic order."""
    check_feasible(n, d, max_n)
    parts = _map_blocks(_collect_block, n, d, workers or default_workers())
    return [p for part in parts for p in part]


def diff_sets(n: int, t: int, a: Decider | str, b: Decider | str, *,
              workers: int | None = None, max_n: int | None = None) -> SetDiff:
    a = a if isinstance(a, Decider) else Decider.from_algo(a, t)
    b = b if isinstance(b, Decider) else Decider.from_algo(b, t)
    sa = set(sortable_set(n, a, workers=workers, max_n=max_n))
    sb = set(sortable_set(n, b, workers=workers, max_n=max_n))
    return SetDiff(sorted(sa - sb), sorted(sb - sa), len(sa & sb))


def closure_violations(n: int, t: int, d: Decider | str, *,
                       perms: Iterable[Sequence[int]] | None = None,
                       workers: int | None = None,
                       max_n: int | None = None) -> list[tuple[Perm, Perm]]:
    """
    Pairs (p, q) with p sortable, q a one-entry deletion of p, and q not
    sortable. ``perms`` restricts the p side; by default all of S_n is scanned.
    """
    d = d if isinstance(d, Decider) else Decider.from_algo(d, t)
    check_feasible(n, d, max_n)
    if perms is None:
        members = sortable_set(n, d, workers=workers, max_n=max_n)
    else:
        members = sorted(tuple(p) for p in perms if len(p) == n and d(p))
    verdict: dict[Perm, bool] = {}
    out = []
    for p in members:
        for q in sorted({delete_at(p, i) for i in range(1, n + 1)}):
            if q not in verdict:
                verdict[q] = d(q)
            if not verdict[q]:
                out.append((p, q))
    return out


def rows_to_csv(rows: Iterable[CountRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "t", "decider", "count"])
    for r in rows:
        w.writerow([r.n, r.t, r.decider, r.count])
    return buf.getvalue()


def rows_to_json(rows: Iterable[CountRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2) + "\n"


def diff_to_json(diff: SetDiff, a: str, b: str) -> str:
    return json.dumps({
        f"only_{a}": [render(p) for p in diff.only_a],
        f"only_{b}": [render(p) for p in diff.only_b],
        "both": diff.both,
    }, indent=2) + "\n"


def diff_to_text(diff: SetDiff, a: str, b: str) -> str:
    lines = [f"# only {a}: {len(diff.only_a)}"]
    lines += [render(p) for p in diff.only_a]
    lines.append(f"# only {b}: {len(diff.only_b)}")
    lines += [render(p) for p in diff.only_b]
    lines.append(f"# both: {diff.both}")
    return "\n".join(lines) + "\n"
