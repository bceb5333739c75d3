"""
Left-greedy and right-greedy sorting on t stacks in series, plus the
single-stack pass operator and West's t-pass sortability test.

Left-greedy always makes the legal move whose destination is furthest left
(output, then the transfer into the exit stack, ..., input push last).
Right-greedy takes the same list in reverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .machine import EMIT, INPUT_PUSH, Move, Snapshot, transfer, trace
from .perm import Perm, is_identity

Priority = Literal["left", "right"]


@dataclass(frozen=True)
class Failure:
    blocked: int  # the input value that can never enter
    gamma: int  # top of the entry stack, smaller than ``blocked``
    moment: int  # the critical moment at which the run got stuck


@dataclass(frozen=True)
class SortOutcome:
    sorted: bool
    moves: tuple[Move, ...]
    critical_snapshots: tuple[Snapshot, ...]
    failure: Failure | None = None

    def trace(self, p: Sequence[int], t: int) -> list[dict]:
        return trace(p, t, self.moves)

    def summary(self) -> dict:
        f = self.failure
        return {
            "sorted": self.sorted,
            "blocked": f.blocked if f else None,
            "gamma": f.gamma if f else None,
        }


def _check_priority(priority: str) -> bool:
    if priority not in ("left", "right"):
        raise ValueError(f"priority must be 'left' or 'right', got {priority!r}")
    return priority == "left"


def _run(p: Sequence[int], t: int, left: bool, record: bool):
    if t < 1:
        raise ValueError(f"need at least one stack, got t={t}")
    n = len(p)
    # scratch stacks, top at the end of each list; stacks[0] is the entry stack
    stacks: list[list[int]] = [[] for _ in range(t)]
    exit_stack = stacks[t - 1]
    entry = stacks[0]
    transfers = [transfer(k) for k in range(1, t)]
    rank = [t + 1] * (n + 1)
    pos = 0
    nxt = 1
    moves: list[Move] = []
    snaps: list[Snapshot] = []

    while True:
        can_emit = bool(exit_stack) and exit_stack[-1] == nxt
        can_push = pos < n and (not entry or p[pos] < entry[-1])
        k_move = 0  # source stack of the chosen transfer
        if left:
            if can_emit:
                kind = 0
            else:
                for k in range(t - 1, 0, -1):
                    src = stacks[k - 1]
                    if src:
                        dst = stacks[k]
                        if not dst or src[-1] < dst[-1]:
                            k_move = k
                            break
                kind = 1 if k_move else (2 if can_push else -1)
        else:
            if can_push:
                kind = 2
            else:
                for k in range(1, t):
                    src = stacks[k - 1]
                    if src:
                        dst = stacks[k]
                        if not dst or src[-1] < dst[-1]:
                            k_move = k
                            break
                kind = 1 if k_move else (0 if can_emit else -1)

        if kind == 2:
            if record:
                snaps.append(Snapshot(pos + 1, tuple(rank[1:])))
                moves.append(INPUT_PUSH)
            v = p[pos]
            pos += 1
            entry.append(v)
            rank[v] -= 1
        elif kind == 1:
            v = stacks[k_move - 1].pop()
            stacks[k_move].append(v)
            rank[v] -= 1
            if record:
                moves.append(transfers[k_move - 1])
        elif kind == 0:
            exit_stack.pop()
            rank[nxt] = 0
            nxt += 1
            if record:
                moves.append(EMIT)
        else:
            break

    if nxt == n + 1:
        return SortOutcome(True, tuple(moves), tuple(snaps)) if record else True
    if not record:
        return False
    # stuck: the entry stack is nonempty and its top is below the next input
    failure = Failure(blocked=p[pos], gamma=entry[-1], moment=pos + 1)
    final = tuple(rank[1:])
    snaps.extend(Snapshot(i, final) for i in range(pos + 1, n + 1))
    return SortOutcome(False, tuple(moves), tuple(snaps), failure)


def run_greedy(p: Sequence[int], t: int, priority: Priority) -> SortOutcome:
    """Run the deterministic greedy strategy until sorted or stuck."""
    return _run(tuple(p), t, _check_priority(priority), record=True)


def greedy_sorts(p: Sequence[int], t: int, priority: Priority) -> bool:
    """Same verdict as ``run_greedy(...).sorted`` without recording anything."""
    return _run(p, t, _check_priority(priority), record=False)


def stack_pass(p: Sequence[int]) -> Perm:
    """
    One pass through a single stack, popping only when the next entry
    cannot be pushed.

    >>> stack_pass((2, 3, 1))
    (2, 1, 3)
    """
    out: list[int] = []
    stack: list[int] = []
    for v in p:
        while stack and stack[-1] < v:
            out.append(stack.pop())
        stack.append(v)
    out.extend(reversed(stack))
    return tuple(out)


def west_t_stack_sortable(p: Sequence[int], t: int) -> bool:
    if t < 1:
        raise ValueError(f"need at least one pass, got t={t}")
    for _ in range(t):
        p = stack_pass(p)
    return is_identity(p)


def dominance_check(p: Sequence[int], t: int) -> bool:
    """
    Compare station ranks at every critical moment: each value must be at
    least as far left under left-greedy as under right-greedy. Moments after
    the right-greedy run has failed are not compared.
    """
    lo = run_greedy(p, t, "left")
    ro = run_greedy(p, t, "right")
    last = ro.failure.moment if ro.failure else len(p)
    for ls, rs in zip(lo.critical_snapshots[:last], ro.critical_snapshots[:last]):
        if any(a > b for a, b in zip(ls.ranks, rs.ranks)):
            return False
    return True
