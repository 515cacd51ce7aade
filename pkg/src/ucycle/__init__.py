"""Explicit universal cycle for the (n-1)-permutations of an n-set."""
from ucycle.permstream import (
    CircularWindow,
    apply_rotation,
    circular_step,
    expand_shorthand,
    flatten,
    missing_symbol,
    perm_stream,
    pi_list,
    ucycle_stream,
)
from ucycle.rankstat import min_sigma_edges, rank, sigma_n_count, unrank
from ucycle.seqcore import (
    ResourceLimitError,
    bit_to_rotation,
    build_r_recursive,
    build_s_recursive,
    counting_stream,
    instrumented_loopless_stream,
    loopless_stream,
)

__all__ = [
    "CircularWindow",
    "ResourceLimitError",
    "apply_rotation",
    "bit_to_rotation",
    "build_r_recursive",
    "build_s_recursive",
    "circular_step",
    "counting_stream",
    "expand_shorthand",
    "flatten",
    "instrumented_loopless_stream",
    "loopless_stream",
    "min_sigma_edges",
    "missing_symbol",
    "perm_stream",
    "pi_list",
    "rank",
    "sigma_n_count",
    "ucycle_stream",
    "unrank",
]
