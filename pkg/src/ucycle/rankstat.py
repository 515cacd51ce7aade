"""Ranking in the explicit permutation list, and sigma_n edge counts."""
from __future__ import annotations

import math
from typing import Sequence

from ucycle.permstream import Perm
from ucycle.seqcore import check_order


def _check_perm(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def rank(p: Sequence[int]) -> int:
    """Position of ``p`` in the explicit list of all permutations of 1..m.

    Splits ``p`` as ``alpha m beta`` around its largest symbol and recurses on
    ``rot(beta) alpha``, where ``rot`` moves the last symbol of beta to its front.

    >>> rank((4, 3, 2, 1)), rank((2, 4, 3, 1)), rank((1, 4, 3, 2))
    (0, 11, 23)
    """
    p = _check_perm(p)
    if not p:
        raise ValueError("cannot rank the empty permutation")
    r, scale = 0, 1
    # Iterative form of the recursion; symbols stay in 1..m at every level.
    while len(p) > 1:
        m = len(p)
        k = p.index(m)
        alpha, beta = p[:k], p[k + 1 :]
        if not alpha:
            p = beta
        else:
            r += scale * (m - len(alpha))
            p = beta[-1:] + beta[:-1] + alpha
        scale *= m
    return r


def rank_by_position(p: Sequence[int]) -> int:
    """Same value as ``rank``, computed from the 1-based position k of the maximum.

    For k > 1 the recursive argument is ``a_n a_{k+1} ... a_{n-1} a_1 ... a_{k-1}``.
    """
    a = _check_perm(p)
    n = len(a)
    if n == 1:
        return 0
    k = a.index(n) + 1
    if k == 1:
        return n * rank_by_position(a[1:])
    if k == n:
        rest = a[: k - 1]
    else:
        rest = (a[n - 1],) + a[k : n - 1] + a[: k - 1]
    return n - k + 1 + n * rank_by_position(rest)


def unrank(n: int, r: int) -> Perm:
    """Inverse of ``rank`` on permutations of 1..n.

    >>> unrank(4, 11)
    (2, 4, 3, 1)
    """
    check_order(n, n_min=1)
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range 0..{math.factorial(n) - 1}")
    if n == 1:
        return (1,)
    i, j = r % n, r // n
    b = unrank(n - 1, j)
    if i == 0:
        return (n, *b)
    if i == 1:
        return (*b, n)
    return b[i - 1 :] + (n,) + b[1 : i - 1] + b[:1]


def sigma_n_count(n: int) -> int:
    """Number of full rotations (0-bits) in S_n.

    >>> [sigma_n_count(n) for n in range(1, 6)]
    [1, 2, 4, 14, 58]
    """
    check_order(n, n_min=1)
    if n == 1:
        return 1
    f, fact = 2, 2  # f_2 and 2!
    for m in range(2, n):
        f = 3 * fact - f
        fact *= m + 1
    return f


def min_sigma_edges(n: int) -> int:
    """Least number of sigma_n edges any Hamilton cycle must use: 2n(n-2)! - 2."""
    check_order(n, n_min=3)
    return 2 * n * math.factorial(n - 2) - 2
