"""
Insertion of a new maximum, the named example families, and the lower-bound
family of left-greedy sortable permutations.
"""
from __future__ import annotations

import math
from typing import Iterator, Sequence

from .perm import Perm, PermutationError, all_permutations


def insert_max(base: Sequence[int], position: int) -> Perm:
    """
    Insert n = len(base) + 1 so that it lands at 1-based ``position``.

    >>> insert_max((3, 2, 1), 3)
    (3, 2, 4, 1)
    """
    n = len(base) + 1
    if not 1 <= position <= n:
        raise PermutationError(f"slot {position} out of range 1..{n}")
    return tuple(base[: position - 1]) + (n,) + tuple(base[position - 1 :])


def right_fail_family(t: int) -> Perm:
    """(t+1) t ... 3 2 (t+2) 1: right-greedy fails on t stacks, left-greedy needs two."""
    if t < 2:
        raise ValueError(f"right_fail_family needs t >= 2, got {t}")
    return tuple(range(t + 1, 1, -1)) + (t + 2, 1)


def left_fail_family(t: int) -> Perm:
    """2 5 4 1 6 7 ... (t+4) 3: sortable on t stacks, but not by left-greedy."""
    if t < 3:
        raise ValueError(f"left_fail_family needs t >= 3, got {t}")
    return (2, 5, 4, 1) + tuple(range(6, t + 5)) + (3,)


def superpattern_family(t: int) -> Perm:
    """2 6 3 5 1 7 8 ... (t+5) 4: left-greedy sortable, contains left_fail_family(t)."""
    if t < 3:
        raise ValueError(f"superpattern_family needs t >= 3, got {t}")
    return (2, 6, 3, 5, 1) + tuple(range(7, t + 6)) + (4,)


def lower_bound(n: int, t: int) -> int:
    if t < 1 or n < t:
        raise ValueError(f"need n >= t >= 1, got n={n}, t={t}")
    return math.factorial(t) * (t + 1) ** (n - t)


def growth_slots(length: int, t: int) -> list[int]:
    """Slots for the new maximum when growing a permutation of ``length``: the first t, or last."""
    last = length + 1
    return sorted({s for s in range(1, min(t, last) + 1)} | {last})


def lower_bound_family(n: int, t: int) -> Iterator[Perm]:
    """
    Seeds are all permutations of length t + 1 in lexicographic order; each
    is grown to length n by inserting the current maximum into slots 1..t or
    the last slot, in ascending slot order.
    """
    if t < 1 or n < t + 1:
        raise ValueError(f"need n >= t + 1 >= 2, got n={n}, t={t}")

    def grow(p: Perm) -> Iterator[Perm]:
        if len(p) == n:
            yield p
            return
        for slot in growth_slots(len(p), t):
            yield from grow(insert_max(p, slot))

    for seed in all_permutations(t + 1):
        yield from grow(seed)
