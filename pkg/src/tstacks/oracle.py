"""
Exhaustive decision of sortability by t stacks in series under any strategy.

Depth-first search over legal moves, trying moves in left-greedy order, with a
set of dead states. Every move lowers the rank sum, so the state graph is
acyclic and one visit per state suffices.

With ``pruning="no-empty-gap"`` an input push is refused whenever an empty
stack sits to the left of (closer to the output than) a nonempty stack. Some
sorting strategy always avoids that situation at every critical moment, so
the verdict does not change.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal, Sequence

from .machine import EMIT, INPUT_PUSH, IllegalMoveError, Move, replay_states, trace, transfer

Pruning = Literal["none", "no-empty-gap"]

DEFAULT_MAX_N = 10
DEFAULT_MAX_STATES = 20_000_000


class SearchLimitExceeded(RuntimeError):
    """The search could not finish within its resource limits.

    This never means "not sortable".
    """


@dataclass(frozen=True)
class Witness:
    moves: tuple[Move, ...]

    def to_json(self, p: Sequence[int], t: int) -> str:
        return json.dumps(trace(p, t, self.moves))


# (cursor, stacks with the top last and the entry stack first, next_output);
# next_output is implied by the other two and carried only as a consistency check
SearchStateKey = tuple[int, tuple[tuple[int, ...], ...], int]


def _has_empty_gap(stacks) -> bool:
    # an empty stack with a nonempty stack somewhere to its right
    seen_nonempty = False
    for st in stacks:
        if st:
            seen_nonempty = True
        elif seen_nonempty:
            return True
    return False


def sortable(
    p: Sequence[int],
    t: int,
    pruning: Pruning = "none",
    *,
    max_n: int = DEFAULT_MAX_N,
    max_states: int | None = DEFAULT_MAX_STATES,
    stats: dict | None = None,
) -> Witness | None:
    """
    Return a witness move sequence sorting ``p`` on ``t`` stacks, or None.

    If ``stats`` is given, ``stats["dead"]`` receives the number of dead
    states recorded.
    """
    if t < 1:
        raise ValueError(f"need at least one stack, got t={t}")
    if pruning not in ("none", "no-empty-gap"):
        raise ValueError(f"unknown pruning mode {pruning!r}")
    p = tuple(p)
    n = len(p)
    if n > max_n:
        raise SearchLimitExceeded(f"n={n} exceeds search limit {max_n}")
    prune = pruning == "no-empty-gap"
    transfers = [transfer(k) for k in range(1, t)]
    dead: set[SearchStateKey] = set()
    path: list[Move] = []

    def search(cursor: int, stacks: tuple, nxt: int) -> bool:
        if nxt > n:
            return True
        key = (cursor, stacks, nxt)
        if key in dead:
            return False
        if max_states is not None and len(dead) >= max_states:
            raise SearchLimitExceeded(f"more than {max_states} dead states explored")
        if nxt != 1 + cursor - sum(map(len, stacks)):
            raise AssertionError(f"corrupt search state {key}")

        top = stacks[t - 1]
        if top and top[-1] == nxt:
            path.append(EMIT)
            if search(cursor, stacks[:-1] + (top[:-1],), nxt + 1):
                return True
            path.pop()
        for k in range(t - 1, 0, -1):
            src = stacks[k - 1]
            if src:
                dst = stacks[k]
                v = src[-1]
                if not dst or v < dst[-1]:
                    nxt_stacks = list(stacks)
                    nxt_stacks[k - 1] = src[:-1]
                    nxt_stacks[k] = dst + (v,)
                    path.append(transfers[k - 1])
                    if search(cursor, tuple(nxt_stacks), nxt):
                        return True
                    path.pop()
        if cursor < n:
            entry = stacks[0]
            v = p[cursor]
            if (not entry or v < entry[-1]) and not (prune and _has_empty_gap(stacks)):
                path.append(INPUT_PUSH)
                if search(cursor + 1, (entry + (v,),) + stacks[1:], nxt):
                    return True
                path.pop()
        dead.add(key)
        return False

    found = search(0, ((),) * t, 1)
    if stats is not None:
        stats["dead"] = len(dead)
    return Witness(tuple(path)) if found else None


def is_sortable(p: Sequence[int], t: int, pruning: Pruning = "none", **limits) -> bool:
    return sortable(p, t, pruning, **limits) is not None


@dataclass(frozen=True)
class ReplayResult:
    ok: bool
    bad_step: int | None = None  # 1-based index of the first illegal move

    def __bool__(self) -> bool:
        return self.ok


def replay(p: Sequence[int], t: int, w: Witness | Sequence[Move]) -> ReplayResult:
    """Check that ``w`` is a legal move sequence ending with ``p`` sorted."""
    moves = w.moves if isinstance(w, Witness) else tuple(w)
    step = 0
    state = None
    try:
        for step, (_, _, state) in enumerate(replay_states(p, t, moves), start=1):
            pass
    except IllegalMoveError:
        return ReplayResult(False, step + 1)
    if state is None:
        return ReplayResult(len(p) == 0)
    return ReplayResult(state.is_sorted and not any(state.stacks))
