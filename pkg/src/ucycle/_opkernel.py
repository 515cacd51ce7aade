"""Compiled mirror of ``LooplessState.advance_counted`` for full runs at large n."""
import numba
import numpy as np


@numba.njit(cache=True)
def loopless_profile_kernel(n):
    a = np.zeros(n + 2, dtype=np.int64)
    d = np.ones(n + 2, dtype=np.int64)
    f = np.arange(n + 2, dtype=np.int64)
    f[n] = n + 1
    bits = 0
    zeros = 0
    total = 0
    mx = 0
    mn = 1 << 30
    while True:
        ops = 0
        j = f[1]
        f[1] = 1
        ops += 2
        x = a[j] - d[j]
        ops += 3
        bit = (j & 1) ^ ((x <= 0) | (x >= n - j))
        ops += 6
        a[j] = a[j] + d[j]
        ops += 4
        hit = (a[j] == 0) | (a[j] == n - j)
        ops += 5
        if hit:
            d[j] = -d[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1
            ops += 9
        ops += 1
        bits += 1
        if bit == 0:
            zeros += 1
        total += ops
        if ops > mx:
            mx = ops
        if ops < mn:
            mn = ops
        if j >= n:
            break
    return bits, mx, mn, total, zeros
