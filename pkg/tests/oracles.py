"""Reference computations that share no code path with the generators under test."""
import itertools

from ucycle.permstream import apply_rotation


def rotation_between(p, q):
    """Bit b such that sigma_{n-b}(p) == q, found by trying both rotations."""
    n = len(p)
    hits = [b for b in (0, 1) if n - b >= 2 and apply_rotation(p, n - b) == q]
    if n == 2 and p == q:
        hits.append(1)
    assert len(hits) == 1, (p, q)
    return hits[0]


def bits_from_list(perms):
    """Rotation bits read off a circular list of permutations."""
    return bytes(rotation_between(p, q) for p, q in zip(perms, perms[1:] + perms[:1]))


def counting_change_positions(n):
    """Most significant changed digit (1-based, left to right) between consecutive
    mixed-radix numbers in base 2 x 3 x ... x n, wrapping at the end."""
    numbers = list(itertools.product(*(range(r) for r in range(2, n + 1))))
    out = []
    for x, y in zip(numbers, numbers[1:] + numbers[:1]):
        out.append(next(i + 1 for i in range(len(x)) if x[i] != y[i]))
    return out


def reflected_gray(n):
    """Reflected mixed-radix Gray code, digits most significant first, by brute recursion."""
    radices = list(range(2, n + 1))

    def rec(rs):
        if not rs:
            return [()]
        tail = rec(rs[1:])
        out = []
        for v in range(rs[0]):
            seq = tail if v % 2 == 0 else tail[::-1]
            out.extend((v,) + t for t in seq)
        return out

    return rec(radices)
