"""
The t-stacks-in-series machine.

Values travel right to left: input -> stack 1 -> stack 2 -> ... -> stack t -> output.
Stack 1 is the entry stack and stack t the exit stack. Every stack must read
strictly increasing from top to bottom, and only the next value of the
identity may be emitted.

Station ranks measure how far right a value still is: output is 0, stack k is
t + 1 - k, and the input is t + 1. Every move lowers exactly one rank by one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import Perm

PUSH = "push"
TRANSFER = "transfer"
OUTPUT = "output"


class IllegalMoveError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Move:
    kind: str
    k: int = 0  # source stack of a transfer, 0 otherwise

    def __str__(self) -> str:
        return f"{TRANSFER}:{self.k}" if self.kind == TRANSFER else self.kind

    @classmethod
    def parse(cls, text: str) -> Move:
        if text == PUSH:
            return INPUT_PUSH
        if text == OUTPUT:
            return EMIT
        kind, _, k = text.partition(":")
        if kind == TRANSFER and k.isdigit() and int(k) >= 1:
            return cls(TRANSFER, int(k))
        raise ValueError(f"unknown move {text!r}")


INPUT_PUSH = Move(PUSH)
EMIT = Move(OUTPUT)


def transfer(k: int) -> Move:
    """Move the top of stack k onto stack k + 1."""
    return Move(TRANSFER, k)


@dataclass(frozen=True)
class MachineState:
    perm: Perm
    cursor: int  # number of values that have entered the stacks
    stacks: tuple[tuple[int, ...], ...]  # stacks[k - 1] is stack k, top first
    next_output: int = 1

    @property
    def t(self) -> int:
        return len(self.stacks)

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def input(self) -> Perm:
        return self.perm[self.cursor:]

    @property
    def is_sorted(self) -> bool:
        return self.next_output == self.n + 1

    @property
    def is_stuck(self) -> bool:
        return not self.is_sorted and not legal_moves(self)

    def stack(self, k: int) -> tuple[int, ...]:
        return self.stacks[k - 1]


@dataclass(frozen=True)
class Snapshot:
    """Station rank of every value at the i-th critical moment."""

    index: int
    ranks: tuple[int, ...]  # ranks[v - 1] for value v

    def rank(self, v: int) -> int:
        return self.ranks[v - 1]


def initial_state(p: Sequence[int], t: int) -> MachineState:
    if t < 1:
        raise ValueError(f"need at least one stack, got t={t}")
    return MachineState(tuple(p), 0, ((),) * t, 1)


def _fits(v: int, dest: tuple[int, ...]) -> bool:
    return not dest or v < dest[0]


def legal_moves(s: MachineState) -> list[Move]:
    """Legal moves ordered by destination, leftmost (output) first."""
    moves = []
    t = s.t
    exit_stack = s.stacks[t - 1]
    if exit_stack and exit_stack[0] == s.next_output:
        moves.append(EMIT)
    for k in range(t - 1, 0, -1):
        src = s.stacks[k - 1]
        if src and _fits(src[0], s.stacks[k]):
            moves.append(transfer(k))
    if s.cursor < s.n and _fits(s.perm[s.cursor], s.stacks[0]):
        moves.append(INPUT_PUSH)
    return moves


def is_legal(s: MachineState, m: Move) -> bool:
    if m.kind == OUTPUT:
        top = s.stacks[-1]
        return bool(top) and top[0] == s.next_output
    if m.kind == PUSH:
        return s.cursor < s.n and _fits(s.perm[s.cursor], s.stacks[0])
    if m.kind == TRANSFER and 1 <= m.k < s.t:
        src = s.stacks[m.k - 1]
        return bool(src) and _fits(src[0], s.stacks[m.k])
    return False


def moved_value(s: MachineState, m: Move) -> int:
    """The value a legal move ``m`` would carry."""
    if m.kind == PUSH:
        return s.perm[s.cursor]
    if m.kind == OUTPUT:
        return s.stacks[-1][0]
    return s.stacks[m.k - 1][0]


def apply_move(s: MachineState, m: Move) -> MachineState:
    if not is_legal(s, m):
        raise IllegalMoveError(f"move {m} is illegal in state {s}")
    stacks = list(s.stacks)
    if m.kind == PUSH:
        stacks[0] = (s.perm[s.cursor],) + stacks[0]
        return MachineState(s.perm, s.cursor + 1, tuple(stacks), s.next_output)
    if m.kind == OUTPUT:
        stacks[-1] = stacks[-1][1:]
        return MachineState(s.perm, s.cursor, tuple(stacks), s.next_output + 1)
    src = stacks[m.k - 1]
    stacks[m.k - 1] = src[1:]
    stacks[m.k] = (src[0],) + stacks[m.k]
    return MachineState(s.perm, s.cursor, tuple(stacks), s.next_output)


def position_rank(s: MachineState, v: int) -> int:
    if not 1 <= v <= s.n:
        raise ValueError(f"value {v} out of range 1..{s.n}")
    if v < s.next_output:
        return 0
    for k, stack in enumerate(s.stacks, start=1):
        if v in stack:
            return s.t + 1 - k
    return s.t + 1


def ranks(s: MachineState) -> tuple[int, ...]:
    """Station rank of every value 1..n."""
    out = [s.t + 1] * s.n
    for v in range(1, s.next_output):
        out[v - 1] = 0
    for k, stack in enumerate(s.stacks, start=1):
        for v in stack:
            out[v - 1] = s.t + 1 - k
    return tuple(out)


def trace_event(step: int, move: Move, value: int, after: MachineState) -> dict:
    """One JSON-lines trace record for a move that has just been applied."""
    return {
        "step": step,
        "move": str(move),
        "value": value,
        "stacks": [list(st) for st in after.stacks],
        "emitted": after.next_output - 1,
    }


def replay_states(p: Sequence[int], t: int, moves: Iterable[Move]) -> Iterator[tuple[Move, int, MachineState]]:
    """Apply ``moves`` in turn, yielding (move, moved value, resulting state)."""
    s = initial_state(p, t)
    for m in moves:
        if not is_legal(s, m):
            raise IllegalMoveError(f"move {m} is illegal in state {s}")
        v = moved_value(s, m)
        s = apply_move(s, m)
        yield m, v, s


def trace(p: Sequence[int], t: int, moves: Iterable[Move]) -> list[dict]:
    return [
        trace_event(step, m, v, s)
        for step, (m, v, s) in enumerate(replay_states(p, t, moves), start=1)
    ]


def pretty(s: MachineState) -> str:
    """
    ASCII picture of a state, output on the left, input on the right.

    Stacks are drawn exit stack first, each as ``[top ... bottom]``.
    """
    out = " ".join(map(str, range(1, s.next_output))) or "-"
    body = "  ".join("[" + " ".join(map(str, st)) + "]" for st in reversed(s.stacks))
    rest = " ".join(map(str, s.input)) or "-"
    return f"out: {out} | {body} | in: {rest}"
