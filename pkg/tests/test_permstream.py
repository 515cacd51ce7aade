import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ucycle.permstream import (
    CircularWindow,
    apply_inverse_rotation,
    apply_rotation,
    circular_step,
    expand_shorthand,
    flatten,
    missing_symbol,
    perm_stream,
    pi_list,
    ucycle_stream,
)
from ucycle.seqcore import build_s_recursive, counting_stream

TABLE_E = (
    "4321 3214 2143 1423 4213 2134 1342 3412 4132 1324 3241 2431 "
    "4312 3124 1243 2413 4123 1234 2341 3421 4231 2314 3142 1432"
).split()
TABLE_F = [4, 3, 2, 1, 4, 2, 1, 3, 4, 1, 3, 2, 4, 3, 1, 2, 4, 1, 2, 3, 4, 2, 3, 1]


def perm(s):
    return tuple(int(c) for c in s)


permutations = st.integers(2, 9).flatmap(lambda m: st.permutations(range(1, m + 1)).map(tuple))


@pytest.mark.parametrize("p, k, q", [("321", 3, "213"), ("132", 2, "312"), ("4321", 3, "3241")])
def test_apply_rotation(p, k, q):
    assert apply_rotation(perm(p), k) == perm(q)


def test_apply_rotation_range():
    with pytest.raises(ValueError):
        apply_rotation((1, 2, 3), 1)
    with pytest.raises(ValueError):
        apply_rotation((1, 2, 3), 4)


@given(permutations, st.data())
def test_rotation_has_order_k_and_inverse(p, data):
    k = data.draw(st.integers(2, len(p)))
    q = p
    for _ in range(k):
        q = apply_rotation(q, k)
    assert q == p
    assert apply_inverse_rotation(apply_rotation(p, k), k) == p
    assert apply_rotation(p, k)[k - 1] == p[0]
    assert apply_rotation(p, k)[k:] == p[k:]


@pytest.mark.parametrize("n", range(3, 9))
def test_closure_pair_identity(n):
    for p in itertools.islice(itertools.permutations(range(1, n + 1)), 5040):
        swapped = p[: n - 2] + (p[n - 1], p[n - 2])
        assert apply_rotation(apply_inverse_rotation(p, n - 1), n) == swapped
        assert apply_rotation(apply_inverse_rotation(p, n), n - 1) == swapped


def test_circular_step_examples():
    w = CircularWindow.initial(3)
    assert w.window() == (3, 2, 1)
    assert circular_step(w, 0) == 3
    assert w.window() == (2, 1, 3)

    w = CircularWindow(backing=[1, 3, 2], t=2)
    assert circular_step(w, 1) == 1
    assert w.window() == (3, 1, 2)


@given(st.integers(2, 9), st.lists(st.integers(0, 1), max_size=60), st.integers(0, 8))
def test_circular_step_is_rotation(n, bits, t):
    w = CircularWindow(backing=list(range(n, 0, -1)), t=t % n)
    for b in bits:
        before = w.window()
        k = n - b
        expected = before if k == 1 else apply_rotation(before, k)
        assert circular_step(w, b) == before[0]
        assert w.window() == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_stream_visits_pi_list_and_closes(n):
    bits = build_s_recursive(n)
    assert list(perm_stream(n, bits)) == pi_list(n)
    w = CircularWindow.initial(n)
    for b in bits:
        circular_step(w, b)
    assert w.window() == tuple(range(n, 0, -1))


@pytest.mark.parametrize(
    "n, expected",
    [(2, [2, 1]), (3, [3, 2, 1, 3, 1, 2]), (4, TABLE_F)],
)
def test_ucycle_stream(n, expected):
    assert list(ucycle_stream(n)) == expected
    assert list(ucycle_stream(n, counting_stream(n))) == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_ucycle_is_first_symbols(n):
    assert list(ucycle_stream(n)) == [p[0] for p in pi_list(n)]


def test_pi_list_small():
    assert pi_list(2) == [(2, 1), (1, 2)]
    assert pi_list(3) == [perm(s) for s in "321 213 132 312 123 231".split()]
    assert pi_list(4) == [perm(s) for s in TABLE_E]


@pytest.mark.parametrize("n", range(2, 8))
def test_pi_list_is_all_permutations(n):
    lst = pi_list(n)
    assert len(lst) == math.factorial(n)
    assert set(lst) == set(itertools.permutations(range(1, n + 1)))


@pytest.mark.parametrize("n", range(3, 8))
def test_block_structure(n):
    lst, prev = pi_list(n), pi_list(n - 1)
    for j, base in enumerate(prev):
        block = lst[j * n : (j + 1) * n]
        assert block[0] == (n, *base)
        # n sits in positions 1, n, n-1, ..., 2 (1-based)
        assert [p.index(n) + 1 for p in block] == [1] + list(range(n, 1, -1))
        a, tau, z = base[0], base[1:-1], base[-1]
        assert block[-1] == (z, n, *tau, a)


def _rot_bit(p, q):
    n = len(p)
    return 0 if apply_rotation(p, n) == q else 1


@pytest.mark.parametrize("n", range(4, 8))
def test_bits_flip_between_blocks(n):
    lst, prev = pi_list(n), pi_list(n - 1)
    size = len(lst)
    for j in range(len(prev)):
        last = lst[(j + 1) * n - 1]
        nxt = lst[((j + 1) * n) % size]
        lower = _rot_bit(prev[j], prev[(j + 1) % len(prev)])
        assert nxt in (apply_rotation(last, n), apply_rotation(last, n - 1))
        assert _rot_bit(last, nxt) == 1 - lower


def test_flatten():
    assert flatten(2) == [2, 1, 1, 2]
    assert "".join(map(str, flatten(3))) == "321213132312123231"
    assert len(flatten(4)) == 96


@pytest.mark.parametrize("window, n, expected", [((3, 2), 3, 1), ((2, 1), 3, 3), ((1, 2, 3, 4), 5, 5)])
def test_missing_symbol(window, n, expected):
    assert missing_symbol(window, n) == expected


@given(permutations)
def test_missing_symbol_recovers_last(p):
    assert missing_symbol(p[:-1]) == p[-1]


@pytest.mark.parametrize("bad", [(1, 1), (0, 2), (4, 1)])
def test_missing_symbol_rejects(bad):
    with pytest.raises(ValueError):
        missing_symbol(bad, 3)


def test_expand_shorthand():
    assert expand_shorthand([3, 2, 1, 3, 1, 2]) == pi_list(3)
    assert expand_shorthand(TABLE_F) == [perm(s) for s in TABLE_E]


@pytest.mark.parametrize("bad", [[3, 2, 1, 3, 2, 1], [3, 3, 1, 2, 1, 2], [1, 2, 3]])
def test_expand_shorthand_rejects(bad):
    with pytest.raises(ValueError):
        expand_shorthand(bad)
