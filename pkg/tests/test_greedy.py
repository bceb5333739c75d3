import itertools
import json

import pytest
from hypothesis import given, strategies as st

from tstacks.greedy import (
    dominance_check,
    greedy_sorts,
    run_greedy,
    stack_pass,
    west_t_stack_sortable,
)
from tstacks.perm import contains_pattern

from oracles import recursive_stack_pass, reference_greedy, perms_upto

perms = st.integers(0, 10).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


@pytest.mark.parametrize("p, t, priority, expected", [
    ((3, 2, 4, 1), 2, "left", True),
    ((3, 2, 4, 1), 2, "right", False),
    ((2, 5, 4, 1, 6, 7, 3), 3, "left", False),
    ((2, 6, 3, 5, 1, 7, 8, 4), 3, "left", True),
    ((6, 3, 7, 2, 4, 5, 1), 3, "right", True),
    ((6, 8, 3, 7, 2, 4, 5, 1), 3, "right", False),
    ((4, 1, 3, 2), 1, "left", True),
    ((), 2, "left", True),
])
def test_run_greedy_examples(p, t, priority, expected):
    out = run_greedy(p, t, priority)
    assert out.sorted is expected
    assert greedy_sorts(p, t, priority) is expected
    assert (out.failure is None) is expected
    assert len(out.critical_snapshots) == len(p)


def test_left_greedy_blocks_on_seven():
    f = run_greedy((2, 5, 4, 1, 6, 7, 3), 3, "left").failure
    assert f.blocked == 7
    assert f.gamma == 6  # 6 sits on the entry stack


def test_right_greedy_failure_on_3241():
    # push 3, push 2, transfer 2; then 4 cannot go over 3 and 3 cannot go over 2
    out = run_greedy((3, 2, 4, 1), 2, "right")
    assert (out.failure.blocked, out.failure.gamma, out.failure.moment) == (4, 3, 3)
    assert [str(m) for m in out.moves] == ["push", "push", "transfer:1"]
    # moments 3 and 4 both use the failure state
    assert out.critical_snapshots[2].ranks == out.critical_snapshots[3].ranks == (3, 1, 2, 3)


def test_bad_priority_or_t():
    with pytest.raises(ValueError):
        run_greedy((1,), 1, "middle")
    with pytest.raises(ValueError):
        run_greedy((1,), 0, "left")


def test_stack_pass_examples():
    assert stack_pass((2, 3, 1)) == (2, 1, 3)
    assert stack_pass((1, 2, 3)) == (1, 2, 3)
    assert stack_pass((6, 3, 7, 2, 4, 5, 1)) == recursive_stack_pass((6, 3, 7, 2, 4, 5, 1))
    assert stack_pass((6, 3, 7, 2, 4, 5, 1)) == (3, 6, 2, 4, 1, 5, 7)


def test_stack_pass_matches_recursive_form():
    for p in perms_upto(8):
        assert stack_pass(p) == recursive_stack_pass(p)


def test_west_examples():
    assert west_t_stack_sortable((4, 1, 3, 2), 1)
    assert west_t_stack_sortable((6, 3, 7, 2, 4, 5, 1), 3)
    assert not west_t_stack_sortable((6, 8, 3, 7, 2, 4, 5, 1), 3)
    p = (6, 8, 3, 7, 2, 4, 5, 1)
    for _ in range(3):
        p = recursive_stack_pass(p)
    assert p == (2, 1, 3, 4, 5, 6, 7, 8)
    with pytest.raises(ValueError):
        west_t_stack_sortable((1,), 0)


def test_dominance_examples():
    assert dominance_check((3, 2, 4, 1), 2)
    assert dominance_check((1, 2, 3), 1)
    assert dominance_check((2, 5, 4, 1, 6, 7, 3), 3)


def test_dominance_catches_a_reversed_comparison():
    # before 2 enters, left-greedy has 3 on the exit stack, right-greedy on the entry stack
    lo = run_greedy((3, 2, 4, 1), 2, "left").critical_snapshots
    ro = run_greedy((3, 2, 4, 1), 2, "right").critical_snapshots
    assert any(a < b for ls, rs in zip(lo, ro) for a, b in zip(ls.ranks, rs.ranks))


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_fast_runner_matches_reference(t):
    for p in perms_upto(6):
        for pri in ("left", "right"):
            out = run_greedy(p, t, pri)
            ok, moves, snaps = reference_greedy(p, t, pri)
            assert out.sorted == ok
            assert list(out.moves) == moves
            assert [s.ranks for s in out.critical_snapshots] == snaps
            assert [s.index for s in out.critical_snapshots] == list(range(1, len(p) + 1))


@given(perms, st.integers(1, 4))
def test_right_greedy_is_west_and_within_left(p, t):
    right = greedy_sorts(p, t, "right")
    assert right == west_t_stack_sortable(p, t)
    assert not right or greedy_sorts(p, t, "left")


@given(perms, st.integers(1, 4))
def test_snapshot_ranks_never_increase(p, t):
    for pri in ("left", "right"):
        snaps = run_greedy(p, t, pri).critical_snapshots
        for a, b in zip(snaps, snaps[1:]):
            assert all(y <= x for x, y in zip(a.ranks, b.ranks))


@given(perms, st.integers(1, 4), st.sampled_from(["left", "right"]))
def test_determinism(p, t, pri):
    a, b = run_greedy(p, t, pri), run_greedy(p, t, pri)
    assert json.dumps(a.trace(p, t)) == json.dumps(b.trace(p, t))
    assert a == b


@pytest.mark.slow
def test_single_stack_is_231_avoidance():
    for n in range(10):
        for p in itertools.permutations(range(1, n + 1)):
            avoids = not contains_pattern(p, (2, 3, 1))
            assert greedy_sorts(p, 1, "left") == avoids
            assert greedy_sorts(p, 1, "right") == avoids
