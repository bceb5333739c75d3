"""
Permutations in one-line notation with 1-based values.

A permutation of length n is a tuple holding each of 1..n exactly once, e.g.
``(4, 1, 3, 2)``. The canonical text form is the values joined by single
spaces; commas are accepted on input.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterator, Sequence

Perm = tuple[int, ...]

MAX_ENUM_N = 12

_SPLIT = re.compile(r"[\s,]+")


class PermutationError(ValueError):
    """Raised for malformed permutation text or invalid permutation arguments."""


def is_permutation(word: Sequence[int]) -> bool:
    """
    >>> [is_permutation(w) for w in [(), (1,), (2, 1), (1, 1), (0, 1)]]
    [True, True, True, False, False]
    """
    return sorted(word) == list(range(1, len(word) + 1))


def parse_permutation(text: str) -> Perm:
    """
    Parse whitespace- or comma-separated values into a permutation.

    >>> parse_permutation("4 1 3 2")
    (4, 1, 3, 2)
    >>> parse_permutation("3,1, 2")
    (3, 1, 2)
    """
    tokens = [tok for tok in _SPLIT.split(text.strip()) if tok]
    n = len(tokens)
    values: list[int] = []
    seen: dict[int, int] = {}
    for pos, tok in enumerate(tokens, start=1):
        if not tok.isdigit():
            raise PermutationError(f"malformed token {tok!r} at position {pos}")
        v = int(tok)
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} at position {pos} is out of range 1..{n}")
        if v in seen:
            raise PermutationError(
                f"duplicate value {v} at position {pos} (first seen at position {seen[v]})"
            )
        seen[v] = pos
        values.append(v)
    return tuple(values)


def render(p: Sequence[int]) -> str:
    return " ".join(map(str, p))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_identity(p: Sequence[int]) -> bool:
    return all(v == i for i, v in enumerate(p, start=1))


def all_permutations(n: int) -> Iterator[Perm]:
    """
    Every permutation of length n, in lexicographic order.

    >>> list(all_permutations(2))
    [(1, 2), (2, 1)]
    """
    if n < 0 or n > MAX_ENUM_N:
        raise PermutationError(f"n={n} outside supported range 0..{MAX_ENUM_N}")
    return itertools.permutations(range(1, n + 1))


def standardize(word: Sequence[int]) -> Perm:
    """Replace distinct values by their ranks 1..k, keeping relative order."""
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    return tuple(rank[v] for v in word)


def delete_at(p: Sequence[int], i: int) -> Perm:
    """
    Remove the entry at 1-based position ``i`` and renormalize to 1..n-1.

    >>> delete_at((4, 1, 3, 2), 1)
    (1, 3, 2)
    """
    if not 1 <= i <= len(p):
        raise PermutationError(f"index {i} out of range 1..{len(p)}")
    gone = p[i - 1]
    return tuple(v - 1 if v > gone else v for j, v in enumerate(p, start=1) if j != i)


def contains_pattern(p: Sequence[int], q: Sequence[int]) -> bool:
    """
    True iff some subsequence of ``p`` is order-isomorphic to ``q``.

    Plain backtracking over index choices; each chosen entry must agree with
    ``q`` on its order relation to every entry chosen before it.

    >>> contains_pattern((4, 1, 3, 2), (2, 3, 1))
    False
    >>> contains_pattern((4, 1, 3, 2), (3, 1, 2))
    True
    """
    n, k = len(p), len(q)
    if k == 0:
        return True
    if k > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        qj = q[j]
        # leave room for the k - j - 1 pattern entries still to place
        for idx in range(start, n - (k - j) + 1):
            v = p[idx]
            if all((p[c] < v) == (q[a] < qj) for a, c in enumerate(chosen)):
                chosen.append(idx)
                if extend(idx + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)
