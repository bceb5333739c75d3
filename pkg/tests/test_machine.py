import pytest
from hypothesis import given, settings, strategies as st

from tstacks.machine import (
    EMIT,
    INPUT_PUSH,
    IllegalMoveError,
    MachineState,
    Move,
    apply_move,
    initial_state,
    legal_moves,
    moved_value,
    position_rank,
    pretty,
    ranks,
    trace,
    transfer,
)


def test_initial_state_examples():
    s = initial_state((4, 1, 3, 2), 1)
    assert s.input == (4, 1, 3, 2) and s.stacks == ((),) and s.next_output == 1
    empty = initial_state((), 3)
    assert empty.is_sorted and legal_moves(empty) == []
    s = initial_state((3, 2, 4, 1), 2)
    assert s.input == (3, 2, 4, 1) and s.stacks == ((), ())
    with pytest.raises(ValueError):
        initial_state((1,), 0)


def test_legal_moves_stuck_on_231():
    s = apply_move(initial_state((2, 3, 1), 1), INPUT_PUSH)
    assert s.stack(1) == (2,)
    assert legal_moves(s) == []
    assert s.is_stuck and not s.is_sorted


def test_legal_moves_output_first():
    s = MachineState((3, 2, 1), 3, ((), (1, 2, 3)), 1)
    assert legal_moves(s)[0] == EMIT


def test_legal_moves_initial_is_push_only():
    assert legal_moves(initial_state((3, 2, 4, 1), 2)) == [INPUT_PUSH]


def test_legal_moves_order_is_by_destination():
    s = MachineState((1, 3, 2), 2, ((3,), (1,)), 1)
    assert legal_moves(s) == [EMIT, INPUT_PUSH]
    s = MachineState((4, 3, 2, 1), 3, ((2,), (3,), (4,)), 1)
    assert legal_moves(s) == [transfer(2), transfer(1), INPUT_PUSH]


def test_apply_move_examples():
    s = MachineState((1, 2), 1, ((1,),), 1)
    assert apply_move(s, EMIT).next_output == 2
    s = MachineState((5, 2), 1, ((5,),), 1)
    assert apply_move(s, INPUT_PUSH).stack(1) == (2, 5)
    s = MachineState((6, 7), 1, ((6,),), 1)
    with pytest.raises(IllegalMoveError):
        apply_move(s, INPUT_PUSH)
    with pytest.raises(IllegalMoveError):
        apply_move(initial_state((1,), 2), EMIT)
    with pytest.raises(IllegalMoveError):
        apply_move(initial_state((1,), 2), transfer(5))


def test_position_rank_examples():
    s = MachineState((1, 3, 2), 2, ((3,), (), ()), 2)
    assert position_rank(s, 1) == 0
    assert position_rank(s, 3) == 3
    assert position_rank(s, 2) == 4
    with pytest.raises(ValueError):
        position_rank(s, 4)
    assert ranks(s) == (0, 4, 3)


def test_move_text_roundtrip():
    for m in (INPUT_PUSH, EMIT, transfer(1), transfer(7)):
        assert Move.parse(str(m)) == m
    with pytest.raises(ValueError):
        Move.parse("pop")


def test_trace_records():
    events = trace((2, 1), 1, [INPUT_PUSH, INPUT_PUSH, EMIT, EMIT])
    assert events[1] == {"step": 2, "move": "push", "value": 1, "stacks": [[1, 2]], "emitted": 0}
    assert events[-1] == {"step": 4, "move": "output", "value": 2, "stacks": [[]], "emitted": 2}


def test_pretty():
    s = MachineState((1, 3, 2), 2, ((3,), ()), 2)
    assert pretty(s) == "out: 1 | []  [3] | in: 2"


@st.composite
def random_walks(draw):
    n = draw(st.integers(0, 8))
    p = tuple(draw(st.permutations(list(range(1, n + 1)))))
    t = draw(st.integers(1, 4))
    choices = draw(st.lists(st.integers(0, 10), min_size=n * (t + 1), max_size=n * (t + 1)))
    return p, t, choices


@settings(max_examples=300)
@given(random_walks())
def test_random_walk_invariants(walk):
    p, t, choices = walk
    n = len(p)
    s = initial_state(p, t)
    steps = 0
    for c in choices:
        legal = legal_moves(s)
        if not legal:
            break
        m = legal[c % len(legal)]
        before = ranks(s)
        v = moved_value(s, m)
        s = apply_move(s, m)
        steps += 1
        after = ranks(s)
        # exactly one value moves one station left
        assert [b - a for a, b in zip(after, before)] == [int(u == v) for u in range(1, n + 1)]
        for st_ in s.stacks:
            assert list(st_) == sorted(st_) and len(set(st_)) == len(st_)
        stacked = [x for st_ in s.stacks for x in st_]
        emitted = list(range(1, s.next_output))
        assert sorted(emitted + stacked + list(s.input)) == list(range(1, n + 1))
        assert all(0 <= r <= t + 1 for r in after)
    assert steps <= n * (t + 1)
    if not legal_moves(s):
        assert s.is_sorted or s.next_output <= n
