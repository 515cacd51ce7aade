"""
Rotation-bit sequences S_n and change-position sequences R_n.

A bit 0 stands for the full rotation sigma_n and a bit 1 for sigma_{n-1}.
Three producers of S_n are provided and must agree bit for bit:

- ``build_s_recursive``: direct expansion of the recursion (materialized).
- ``counting_stream``: plain multi-radix counting in base 2 x 3 x ... x n.
- ``loopless_stream``: reflected multi-radix Gray code with focus pointers,
  constant work between consecutive bits.

Both iterative producers use the output parity ``j odd``; the printed
``j even`` variant emits the complement (see ``printed_parity_stream``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

N_MAX = 12
"""Largest order for which factorial-size sequences are materialized."""

STREAM_N_MAX = 20
"""Largest order accepted by streaming producers (n! fits in 64 bits)."""


class ResourceLimitError(ValueError):
    """Raised when a request would exceed a configured size guard."""


def check_order(n: int, *, n_min: int = 2, n_max: int | None = None, guard: str = "n_max") -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"order must be an int, got {type(n).__name__}")
    if n < n_min:
        raise ValueError(f"order n={n} is below the minimum {n_min}")
    if n_max is not None and n > n_max:
        raise ResourceLimitError(f"order n={n} exceeds resource guard {guard}={n_max}")
    return n


def bit_to_rotation(b: int, n: int) -> int:
    """Length of the rotation encoded by bit ``b`` at order ``n``.

    >>> bit_to_rotation(0, 5), bit_to_rotation(1, 5)
    (5, 4)
    """
    if b not in (0, 1):
        raise ValueError(f"rotation bit must be 0 or 1, got {b!r}")
    return n - b


def build_s_recursive(n: int, *, n_max: int = N_MAX) -> bytes:
    """Materialize S_n as a ``bytes`` object of n! zeros and ones.

    S_2 = 00 and S_{m+1} replaces each bit x of S_m by ``0 0 1^(m-2) (1-x)``.

    >>> list(build_s_recursive(3))
    [0, 0, 1, 0, 0, 1]
    """
    check_order(n, n_max=n_max)
    s = b"\x00\x00"
    for m in range(2, n):
        head = b"\x00\x00" + b"\x01" * (m - 2)
        block = {0: head + b"\x01", 1: head + b"\x00"}
        s = b"".join(block[x] for x in s)
    return s


def build_r_recursive(n: int, *, n_max: int = N_MAX) -> list[int]:
    """Materialize R_n: R_2 = 11 and R_{m+1} puts m copies of m before each entry of R_m.

    >>> build_r_recursive(3)
    [2, 2, 1, 2, 2, 1]
    """
    check_order(n, n_max=n_max)
    r = [1, 1]
    for m in range(2, n):
        prefix = [m] * m
        out: list[int] = []
        for y in r:
            out.extend(prefix)
            out.append(y)
        r = out
    return r


@dataclass
class CounterState:
    """Digits of the plain multi-radix counter.

    ``a[j]`` for 1 <= j <= n-1 runs over 0..n-j; ``a[n]`` and ``a[n+1]`` are
    sentinels that stop the carry chain. Index 0 is unused.
    """

    n: int
    a: list[int] = field(default_factory=list)
    j: int = 0
    emitted: int = 0

    @classmethod
    def initial(cls, n: int) -> CounterState:
        check_order(n, n_max=STREAM_N_MAX, guard="STREAM_N_MAX")
        return cls(n=n, a=[0] * (n + 2))

    @property
    def done(self) -> bool:
        return self.j >= self.n

    def advance(self) -> int:
        """Run one counting step and return the emitted bit."""
        if self.done:
            raise StopIteration
        n, a = self.n, self.a
        j = 1
        while a[j] == n - j:
            a[j] = 0
            j += 1
        bit = (j & 1) ^ (a[j] <= 1)
        a[j] += 1
        self.j = j
        self.emitted += 1
        return bit


def counting_stream(n: int) -> Iterator[int]:
    """Yield the n! bits of S_n by multi-radix counting (amortized O(1) per bit)."""
    check_order(n, n_max=STREAM_N_MAX, guard="STREAM_N_MAX")
    return _counting(n)


def _counting(n: int, flip: int = 0) -> Iterator[int]:
    a = [0] * (n + 2)
    while True:
        j = 1
        while a[j] == n - j:
            a[j] = 0
            j += 1
        yield (j & 1) ^ flip ^ (a[j] <= 1)
        a[j] += 1
        if j >= n:
            return


def position_stream(n: int) -> Iterator[int]:
    """Yield R_n: the most significant digit position changed at each counting step.

    Positions are numbered 1..n-1 from the most significant (radix 2) digit.
    The final step wraps every digit back to zero and reports position 1.
    """
    check_order(n, n_max=STREAM_N_MAX, guard="STREAM_N_MAX")
    return _positions(n)


def _positions(n: int) -> Iterator[int]:
    a = [0] * (n + 2)
    while True:
        j = 1
        while a[j] == n - j:
            a[j] = 0
            j += 1
        yield max(n - j, 1)
        a[j] += 1
        if j >= n:
            return


@dataclass
class LooplessState:
    """Reflected Gray-code digits ``a``, directions ``d`` and focus pointers ``f``.

    Arrays are indexed 1..n+1 (index 0 unused). ``f[n] = n + 1`` makes the
    final iteration land on the sentinel digit ``a[n+1]``.
    """

    n: int
    a: list[int] = field(default_factory=list)
    d: list[int] = field(default_factory=list)
    f: list[int] = field(default_factory=list)
    j: int = 0
    emitted: int = 0

    @classmethod
    def initial(cls, n: int) -> LooplessState:
        check_order(n, n_max=STREAM_N_MAX, guard="STREAM_N_MAX")
        f = list(range(n + 2))
        f[n] = n + 1
        return cls(n=n, a=[0] * (n + 2), d=[1] * (n + 2), f=f)

    @property
    def done(self) -> bool:
        return self.j >= self.n

    def advance(self) -> int:
        """Run one loopless iteration and return the emitted bit."""
        return self.advance_counted()[0]

    def advance_counted(self) -> tuple[int, int]:
        """Run one iteration; return ``(bit, primitive operation count)``.

        Every array read or write, comparison, addition/subtraction, negation,
        parity test and xor is counted once. Both sides of the ``or`` tests are
        always evaluated so the count depends only on the branch taken.
        """
        if self.done:
            raise StopIteration
        n, a, d, f = self.n, self.a, self.d, self.f
        ops = 0
        # j <- f1; f1 <- 1
        j = f[1]
        f[1] = 1
        ops += 2
        # x <- a_j - d_j: two reads, one subtraction
        x = a[j] - d[j]
        ops += 3
        # n-j, two comparisons, or, parity, xor
        bit = (j & 1) ^ ((x <= 0) | (x >= n - j))
        ops += 6
        # a_j <- a_j + d_j: two reads, add, write
        a[j] = a[j] + d[j]
        ops += 4
        # read a_j, n-j, two comparisons, or
        hit = (a[j] == 0) | (a[j] == n - j)
        ops += 5
        if hit:
            # d_j <- -d_j: read, negate, write
            d[j] = -d[j]
            # f_j <- f_{j+1}: add, read, write
            f[j] = f[j + 1]
            # f_{j+1} <- j+1: add, add, write
            f[j + 1] = j + 1
            ops += 9
        # until j >= n
        ops += 1
        self.j = j
        self.emitted += 1
        return bit, ops


def loopless_stream(n: int) -> Iterator[int]:
    """Yield the n! bits of S_n with a fixed amount of work per bit."""
    check_order(n, n_max=STREAM_N_MAX, guard="STREAM_N_MAX")
    return _loopless(n)


def _loopless(n: int, flip: int = 0) -> Iterator[int]:
    a = [0] * (n + 2)
    d = [1] * (n + 2)
    f = list(range(n + 2))
    f[n] = n + 1
    while True:
        j = f[1]
        f[1] = 1
        x = a[j] - d[j]
        yield (j & 1) ^ flip ^ (x <= 0 or x >= n - j)
        a[j] += d[j]
        if a[j] == 0 or a[j] == n - j:
            d[j] = -d[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1
        if j >= n:
            return


def gray_position_stream(n: int) -> Iterator[int]:
    """R_n read off the loopless generator: the digit position each Gray-code step changes."""
    check_order(n, n_max=STREAM_N_MAX, guard="STREAM_N_MAX")
    return _gray_positions(n)


def _gray_positions(n: int) -> Iterator[int]:
    a = [0] * (n + 2)
    d = [1] * (n + 2)
    f = list(range(n + 2))
    f[n] = n + 1
    while True:
        j = f[1]
        f[1] = 1
        yield max(n - j, 1)
        a[j] += d[j]
        if a[j] == 0 or a[j] == n - j:
            d[j] = -d[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1
        if j >= n:
            return


def instrumented_loopless_stream(n: int) -> Iterator[tuple[int, int]]:
    """Yield ``(bit, op_count)`` pairs; bits equal ``loopless_stream(n)``."""
    state = LooplessState.initial(n)
    return _instrumented(state)


def _instrumented(state: LooplessState) -> Iterator[tuple[int, int]]:
    while not state.done:
        yield state.advance_counted()


def printed_parity_stream(n: int, method: str = "counting") -> Iterator[int]:
    """Bits produced with the ``j even`` output parity as originally printed.

    Kept only to demonstrate that it yields the complement of S_n.
    """
    check_order(n, n_max=STREAM_N_MAX, guard="STREAM_N_MAX")
    if method == "counting":
        return _counting(n, flip=1)
    if method == "loopless":
        return _loopless(n, flip=1)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class OpProfile:
    n: int
    bits: int
    max_ops: int
    min_ops: int
    total_ops: int
    zeros: int

    @property
    def mean_ops(self) -> float:
        return self.total_ops / self.bits


def loopless_op_profile(n: int, *, compiled: bool | None = None) -> OpProfile:
    """Op-count summary over a full run of the loopless generator.

    ``compiled=None`` picks the numba kernel for n > 9 when available. The
    kernel mirrors ``LooplessState.advance_counted`` statement for statement.
    """
    check_order(n, n_max=STREAM_N_MAX, guard="STREAM_N_MAX")
    if compiled is None:
        compiled = n > 9 and _kernel() is not None
    if compiled:
        kernel = _kernel()
        if kernel is None:
            raise RuntimeError("numba is not available for the compiled op-count kernel")
        bits, mx, mn, total, zeros = kernel(n)
        return OpProfile(n, int(bits), int(mx), int(mn), int(total), int(zeros))
    bits = mx = total = zeros = 0
    mn = math.inf
    for bit, ops in instrumented_loopless_stream(n):
        bits += 1
        total += ops
        zeros += bit == 0
        mx = max(mx, ops)
        mn = min(mn, ops)
    return OpProfile(n, bits, mx, int(mn), total, zeros)


_KERNEL = None


def _kernel():
    global _KERNEL
    if _KERNEL is None:
        try:
            from ucycle._opkernel import loopless_profile_kernel
        except ImportError:  # pragma: no cover
            return None
        _KERNEL = loopless_profile_kernel
    return _KERNEL
