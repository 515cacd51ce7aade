"""
Permutations driven by rotation bits, and the universal cycle U_n.

Permutations are tuples in one-line notation over the symbols 1..n. A
rotation sigma_k acts on positions: the first k entries rotate left by one.
Public indices are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ucycle.seqcore import N_MAX, check_order, loopless_stream

Perm = tuple[int, ...]


def apply_rotation(p: Sequence[int], k: int) -> Perm:
    """Apply sigma_k: move the first symbol to position k.

    >>> apply_rotation((3, 2, 1), 3)
    (2, 1, 3)
    >>> apply_rotation((1, 3, 2), 2)
    (3, 1, 2)
    """
    if not 2 <= k <= len(p):
        raise ValueError(f"rotation length k={k} out of range for a permutation of length {len(p)}")
    p = tuple(p)
    return p[1:k] + p[:1] + p[k:]


def apply_inverse_rotation(p: Sequence[int], k: int) -> Perm:
    """Undo sigma_k: move the symbol at position k to the front."""
    if not 2 <= k <= len(p):
        raise ValueError(f"rotation length k={k} out of range for a permutation of length {len(p)}")
    p = tuple(p)
    return p[k - 1 : k] + p[: k - 1] + p[k:]


def start_permutation(n: int) -> Perm:
    """The first permutation n n-1 ... 1 of every list."""
    return tuple(range(n, 0, -1))


@dataclass
class CircularWindow:
    """Current permutation stored circularly: it reads ``backing[t+1], ..., backing[t]``."""

    backing: list[int]
    t: int

    @classmethod
    def initial(cls, n: int) -> CircularWindow:
        return cls(backing=list(range(n, 0, -1)), t=n - 1)

    @property
    def n(self) -> int:
        return len(self.backing)

    def window(self) -> Perm:
        s = self.t + 1
        return tuple(self.backing[s:] + self.backing[:s])


def circular_step(w: CircularWindow, b: int) -> int:
    """Emit the first symbol of ``w``, then apply the rotation encoded by ``b``.

    Advancing ``t`` realizes sigma_n; swapping the two cells at the new end
    of the window turns that into sigma_{n-1}.
    """
    backing, n = w.backing, len(w.backing)
    t_prev = w.t
    t = t_prev + 1
    if t == n:
        t = 0
    # t is now also the index of the current first symbol
    symbol = backing[t]
    w.t = t
    if b:
        backing[t], backing[t_prev] = backing[t_prev], backing[t]
    return symbol


def ucycle_stream(n: int, bits: Iterable[int] | None = None) -> Iterator[int]:
    """Yield the universal cycle symbols: one first-symbol per rotation bit.

    ``bits`` defaults to ``loopless_stream(n)``.

    >>> list(ucycle_stream(3))
    [3, 2, 1, 3, 1, 2]
    """
    check_order(n)
    if bits is None:
        bits = loopless_stream(n)
    return _ucycle(n, iter(bits))


def _ucycle(n: int, bits: Iterator[int]) -> Iterator[int]:
    w = CircularWindow.initial(n)
    for b in bits:
        yield circular_step(w, b)


def perm_stream(n: int, bits: Iterable[int] | None = None) -> Iterator[Perm]:
    """Yield each visited permutation in turn, starting with n n-1 ... 1.

    One permutation is produced per bit; the bit is then applied to move on.
    """
    check_order(n)
    if bits is None:
        bits = loopless_stream(n)
    return _perms(n, iter(bits))


def _perms(n: int, bits: Iterator[int]) -> Iterator[Perm]:
    w = CircularWindow.initial(n)
    for b in bits:
        yield w.window()
        circular_step(w, b)


def pi_list(n: int, *, n_max: int = N_MAX) -> list[Perm]:
    """Build the list of all n! permutations directly from its recursive definition.

    Block j starts with ``n`` prepended to entry j of the list for n-1, then
    continues with sigma_n twice and sigma_{n-1} n-3 more times. This never
    consults a bit sequence.
    """
    check_order(n, n_max=n_max)
    if n == 2:
        return [(2, 1), (1, 2)]
    out: list[Perm] = []
    for p in pi_list(n - 1, n_max=n_max):
        q = (n, *p)
        out.append(q)
        q = apply_rotation(q, n)
        out.append(q)
        q = apply_rotation(q, n)
        out.append(q)
        for _ in range(n - 3):
            q = apply_rotation(q, n - 1)
            out.append(q)
    return out


def flatten(n: int, *, n_max: int = N_MAX) -> list[int]:
    """Concatenate all permutations of ``pi_list(n)`` into one circular sequence."""
    return [x for p in pi_list(n, n_max=n_max) for x in p]


def missing_symbol(window: Sequence[int], n: int | None = None) -> int:
    """Return the one symbol of 1..n absent from ``window`` (n defaults to len + 1).

    >>> missing_symbol((3, 2)), missing_symbol((2, 1))
    (1, 3)
    """
    if n is None:
        n = len(window) + 1
    if len(window) != n - 1:
        raise ValueError(f"window of length {len(window)} cannot miss exactly one of {n} symbols")
    seen = set(window)
    if len(seen) != len(window):
        raise ValueError(f"window {tuple(window)} has repeated symbols")
    if not seen <= set(range(1, n + 1)):
        raise ValueError(f"window {tuple(window)} has symbols outside 1..{n}")
    return n * (n + 1) // 2 - sum(window)


def expand_shorthand(u: Sequence[int]) -> list[Perm]:
    """Recover one permutation per position of a shorthand universal cycle.

    Each circular window of length n-1 is completed with its missing symbol.
    Raises ``ValueError`` if a window is not an (n-1)-permutation or repeats.
    """
    n = _order_of(len(u))
    u = list(u)
    ext = u + u[: n - 2]
    out: list[Perm] = []
    seen: set[Perm] = set()
    for i in range(len(u)):
        win = tuple(ext[i : i + n - 1])
        p = win + (missing_symbol(win, n),)
        if p in seen:
            raise ValueError(f"window {win} at position {i} repeats an earlier window")
        seen.add(p)
        out.append(p)
    return out


def _order_of(length: int) -> int:
    f, n = 1, 1
    while f < length:
        n += 1
        f *= n
    if f != length or n < 2:
        raise ValueError(f"length {length} is not a factorial n! with n >= 2")
    return n
