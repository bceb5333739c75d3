"""Sorting permutations with t stacks in series: greedy strategies, an exhaustive oracle, and enumeration."""
from .constructions import (
    insert_max,
    left_fail_family,
    lower_bound,
    lower_bound_family,
    right_fail_family,
    superpattern_family,
)
from .greedy import SortOutcome, dominance_check, run_greedy, stack_pass, west_t_stack_sortable
from .machine import MachineState, Move, apply_move, initial_state, legal_moves, position_rank
from .oracle import SearchLimitExceeded, Witness, replay, sortable
from .perm import all_permutations, contains_pattern, delete_at, parse_permutation, render

__version__ = "0.1.0"
