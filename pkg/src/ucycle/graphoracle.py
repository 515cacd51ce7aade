"""
Brute-force verification against the explicit Cayley graph.

Everything here works on materialized graphs and is meant for small n.
Vertices are indexed by their position in lexicographic order.
"""
from __future__ import annotations

import itertools
import math
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ucycle.permstream import Perm, apply_inverse_rotation, apply_rotation, start_permutation
from ucycle.seqcore import bit_to_rotation, check_order

GRAPH_N_MAX = 8


def _rotate(p: Perm, k: int) -> Perm:
    # sigma_1 is the identity; only reachable for n = 2
    return p if k == 1 else apply_rotation(p, k)


def _label(p: Sequence[int]) -> str:
    sep = "" if len(p) <= 9 else ","
    return sep.join(map(str, p))


@dataclass
class CayleyGraph:
    """Both rotation successors of every permutation.

    ``succ[0][v]`` is the index of sigma_n(v) and ``succ[1][v]`` that of sigma_{n-1}(v).
    """

    n: int
    perms: list[Perm]
    index: dict[Perm, int]
    succ: tuple[list[int], list[int]]

    def __len__(self) -> int:
        return len(self.perms)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for v in range(len(self.perms)):
            for b in (0, 1):
                yield v, self.succ[b][v], b

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.perms)
        for _, w, _ in self.edges():
            deg[w] += 1
        return deg

    def walk(self, bits: Sequence[int]) -> list[int]:
        """Vertex indices visited from n n-1 ... 1, one per bit (closing vertex excluded)."""
        v = self.index[start_permutation(self.n)]
        out = []
        for b in bits:
            out.append(v)
            v = self.succ[b][v]
        return out


def build_cayley(n: int) -> CayleyGraph:
    check_order(n, n_max=GRAPH_N_MAX, guard="GRAPH_N_MAX")
    perms = list(itertools.permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(perms)}
    succ0 = [index[_rotate(p, n)] for p in perms]
    succ1 = [index[_rotate(p, n - 1)] for p in perms]
    return CayleyGraph(n, perms, index, (succ0, succ1))


@dataclass
class HamiltonReport:
    n: int
    steps: int
    distinct: bool
    closes: bool
    failure_step: int | None = None
    failure_perm: Perm | None = None

    @property
    def ok(self) -> bool:
        return self.distinct and self.closes

    def __bool__(self) -> bool:
        return self.ok


def validate_hamilton(bits: Sequence[int], n: int) -> HamiltonReport:
    """Follow ``bits`` from n n-1 ... 1 and check that they trace a Hamilton cycle.

    ``failure_step`` is the index of the first step that lands on an already
    visited permutation, or that fails to return to the start.
    """
    check_order(n)
    total = math.factorial(n)
    start = start_permutation(n)
    p = start
    seen = {p}
    steps = 0
    for i, b in enumerate(bits):
        p = _rotate(p, bit_to_rotation(b, n))
        steps += 1
        if i == total - 1:
            break
        if p in seen:
            return HamiltonReport(n, steps, False, False, i, p)
        seen.add(p)
    if steps != total or len(seen) != total:
        return HamiltonReport(n, steps, False, False, steps, p)
    closes = p == start
    return HamiltonReport(n, steps, True, closes, None if closes else total - 1, None if closes else p)


@dataclass
class WindowReport:
    """Outcome of a windowed check; ``failure`` locates the first offending window."""

    ok: bool
    failure: int | None = None
    offset: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _windows(seq: Sequence[int], starts: Iterator[int], length: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    size = len(seq)
    for s in starts:
        yield s, tuple(seq[(s + k) % size] for k in range(length))


def _check_partial_perms(windows, n: int, offset: int | None = None) -> WindowReport:
    alphabet = set(range(1, n + 1))
    seen = set()
    for pos, w in windows:
        if len(set(w)) != len(w) or not set(w) <= alphabet:
            return WindowReport(False, pos, offset, f"window {w} is not an {n - 1}-permutation of 1..{n}")
        if w in seen:
            return WindowReport(False, pos, offset, f"window {w} repeats")
        seen.add(w)
    return WindowReport(True, offset=offset)


def verify_universal(u: Sequence[int], n: int) -> WindowReport:
    """True iff every circular window of length n-1 is a distinct (n-1)-permutation."""
    check_order(n)
    if len(u) != math.factorial(n):
        return WindowReport(False, reason=f"length {len(u)} != {n}!")
    return _check_partial_perms(_windows(u, iter(range(len(u))), n - 1), n)


def offset_rows(flat: Sequence[int], n: int) -> list[list[tuple[int, ...]]]:
    """For each offset m, the (n-1)-windows starting at m, m+n, m+2n, ..."""
    size = len(flat)
    return [[w for _, w in _windows(flat, iter(range(m, m + size, n)), n - 1)] for m in range(n)]


def verify_multiversal(flat: Sequence[int], n: int) -> WindowReport:
    """True iff every residue class of starting offsets mod n yields all (n-1)-permutations."""
    check_order(n)
    size = n * math.factorial(n)
    if len(flat) != size:
        return WindowReport(False, reason=f"length {len(flat)} != n * n!")
    for m in range(n):
        report = _check_partial_perms(_windows(flat, iter(range(m, m + size, n)), n - 1), n, m)
        if not report:
            return report
    return WindowReport(True)


def check_shift_lemma(flat: Sequence[int], n: int) -> WindowReport:
    """True iff ``flat[i] == flat[i + n - 1]`` (circularly) whenever i mod n is not 0 or n-1."""
    check_order(n)
    size = len(flat)
    if size == 0 or size % n:
        return WindowReport(False, reason=f"length {size} is not a positive multiple of {n}")
    for i in range(size):
        if i % n in (0, n - 1):
            continue
        if flat[i] != flat[(i + n - 1) % size]:
            return WindowReport(False, i, reason=f"a[{i}] != a[{(i + n - 1) % size}]")
    return WindowReport(True)


class PairingError(AssertionError):
    """A sigma_n edge without the partner edge required by the coset contraction."""


@dataclass
class CosetGraph:
    """The Cayley graph with every sigma_{n-1} orbit contracted to one vertex.

    Each sigma_n edge ``u -> sigma_n(u)`` is paired with the edge leaving
    ``x = sigma_{n-1}^-1(sigma_n(u))``, which lands on ``sigma_{n-1}(u)``. A
    pair becomes one undirected edge of ``raw_edges``, keyed by its smaller tail.
    """

    n: int
    cayley: CayleyGraph
    coset_of: list[int]
    members: list[list[int]]
    partner: list[int]
    raw_edges: list[tuple[int, int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    def representative(self, c: int) -> Perm:
        return self.cayley.perms[self.members[c][0]]

    def edge_of_tail(self, v: int) -> tuple[int, int]:
        a, b = self.coset_of[v], self.coset_of[self.cayley.succ[0][v]]
        return (a, b) if a <= b else (b, a)

    def distinct_edges(self) -> list[tuple[int, int]]:
        return sorted(set(self.raw_edges))

    def adjacency(self, edges: Sequence[tuple[int, int]] | None = None) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in self.members]
        for a, b in self.distinct_edges() if edges is None else edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency()]

    def diameter(self) -> int:
        adj = self.adjacency()
        return max(max(_bfs(adj, s)) for s in range(len(adj)))


def _bfs(adj: list[set[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def build_coset_graph(n: int, cayley: CayleyGraph | None = None) -> CosetGraph:
    check_order(n, n_min=3, n_max=GRAPH_N_MAX, guard="GRAPH_N_MAX")
    g = cayley if cayley is not None else build_cayley(n)
    succ0, succ1 = g.succ
    size = len(g)
    coset_of = [-1] * size
    members: list[list[int]] = []
    for v in range(size):
        if coset_of[v] >= 0:
            continue
        orbit, w = [], v
        while coset_of[w] < 0:
            coset_of[w] = len(members)
            orbit.append(w)
            w = succ1[w]
        members.append(orbit)
    partner = [-1] * size
    raw: list[tuple[int, int]] = []
    for u in range(size):
        v = succ0[u]
        x = g.index[apply_inverse_rotation(g.perms[v], n - 1)]
        # sigma_{n-1}^-1 sigma_n sigma_{n-1}^-1 sigma_n = id, read right to left
        if succ0[x] != succ1[u] or x == u:
            raise PairingError(f"sigma_n edge from {_label(g.perms[u])} has no partner")
        partner[u] = x
    for u in range(size):
        if partner[partner[u]] != u:
            raise PairingError(f"pairing is not an involution at {_label(g.perms[u])}")
        if u < partner[u]:
            a, b = coset_of[u], coset_of[succ0[u]]
            if {a, b} != {coset_of[partner[u]], coset_of[succ0[partner[u]]]}:
                raise PairingError(f"paired edges at {_label(g.perms[u])} join different cosets")
            raw.append((a, b) if a <= b else (b, a))
    return CosetGraph(n, g, coset_of, members, partner, raw)


@dataclass
class SpanningReport:
    n: int
    sigma_edges: int
    paired_edges: int
    edge_count: int
    vertices: int
    partners_used: bool
    connected: bool

    @property
    def is_tree(self) -> bool:
        return self.connected and self.edge_count == self.vertices - 1


def sigma_edges_spanning_check(n: int, bits: Sequence[int] | None = None) -> SpanningReport:
    """Project the sigma_n edges of a Hamilton cycle onto the coset graph.

    ``sigma_edges`` counts directed edges used, ``paired_edges`` the undirected
    pairs they form and ``edge_count`` the distinct coset pairs among them.
    """
    from ucycle.seqcore import build_s_recursive

    check_order(n, n_min=3, n_max=7)
    if bits is None:
        bits = build_s_recursive(n)
    q = build_coset_graph(n)
    tails = {v for v, b in zip(q.cayley.walk(bits), bits) if b == 0}
    partners_used = all(q.partner[v] in tails for v in tails)
    pairs = {min(v, q.partner[v]) for v in tails}
    edges = sorted({q.edge_of_tail(v) for v in pairs})
    adj = q.adjacency(edges)
    connected = min(_bfs(adj, 0)) >= 0
    return SpanningReport(n, len(tails), len(pairs), len(edges), len(q), partners_used, connected)


class _OutOfTime(Exception):
    pass


@dataclass
class BruteForceResult:
    n: int
    minimum: int | None
    conclusive: bool
    cycles_found: int
    nodes: int
    elapsed: float
    best_bits: tuple[int, ...] | None = None


def hamilton_cycles(n: int) -> Iterator[tuple[int, ...]]:
    """Every Hamilton cycle through n n-1 ... 1, as its bit sequence including the closing bit.

    Exploration tries label 0 before label 1, so the output order is fixed.
    """
    check_order(n, n_min=3, n_max=5)
    g = build_cayley(n)
    succ = g.succ
    start = g.index[start_permutation(n)]
    total = len(g)
    visited = [False] * total
    visited[start] = True
    bits: list[int] = []

    def extend(v: int, depth: int) -> Iterator[tuple[int, ...]]:
        if depth == total:
            for b in (0, 1):
                if succ[b][v] == start:
                    yield (*bits, b)
            return
        for b in (0, 1):
            w = succ[b][v]
            if not visited[w]:
                visited[w] = True
                bits.append(b)
                yield from extend(w, depth + 1)
                bits.pop()
                visited[w] = False

    yield from extend(start, 1)


def min_hamilton_sigma_edges_bruteforce(n: int, budget: float | None = None) -> BruteForceResult:
    """Least number of sigma_n edges over all Hamilton cycles, by exhaustive search.

    A branch is cut when the sigma_n edges used so far, plus one for every
    sigma_{n-1} coset not yet entered (only sigma_n edges lead into a new
    coset), cannot beat the best cycle found. If ``budget`` seconds run out
    the result is marked inconclusive and ``minimum`` is None.
    """
    check_order(n, n_min=3, n_max=5)
    t0 = time.monotonic()
    deadline = None if budget is None else t0 + budget
    g = build_cayley(n)
    q = build_coset_graph(n, g)
    succ = g.succ
    coset_of = q.coset_of
    start = g.index[start_permutation(n)]
    total = len(g)
    visited = [False] * total
    entered = [0] * len(q)
    visited[start] = True
    entered[coset_of[start]] = 1
    best = math.inf
    best_bits: tuple[int, ...] | None = None
    cycles = nodes = 0
    untouched = len(q) - 1
    bits: list[int] = []

    def search(v: int, depth: int, zeros: int) -> None:
        nonlocal best, best_bits, cycles, nodes, untouched
        nodes += 1
        if deadline is not None and nodes & 0xFFF == 0 and time.monotonic() > deadline:
            raise _OutOfTime
        if zeros + untouched >= best:
            return
        if depth == total:
            for b in (0, 1):
                if succ[b][v] == start:
                    cycles += 1
                    z = zeros + (b == 0)
                    if z < best:
                        best, best_bits = z, (*bits, b)
            return
        for b in (0, 1):
            w = succ[b][v]
            if visited[w]:
                continue
            c = coset_of[w]
            visited[w] = True
            entered[c] += 1
            untouched -= entered[c] == 1
            bits.append(b)
            search(w, depth + 1, zeros + (b == 0))
            bits.pop()
            untouched += entered[c] == 1
            entered[c] -= 1
            visited[w] = False

    try:
        search(start, 1, 0)
    except _OutOfTime:
        return BruteForceResult(n, None, False, cycles, nodes, time.monotonic() - t0)
    return BruteForceResult(
        n, None if best == math.inf else int(best), True, cycles, nodes, time.monotonic() - t0, best_bits
    )


def _highlight_tails(g: CayleyGraph, bits: Sequence[int] | None) -> set[tuple[int, int]]:
    if bits is None:
        return set()
    return {(v, b) for v, b in zip(g.walk(bits), bits)}


def export_dot(g: CayleyGraph | CosetGraph, highlight: Sequence[int] | None = None) -> str:
    """Render a graph in DOT syntax with deterministic ordering.

    ``highlight`` is a bit sequence; the edges it traverses from n n-1 ... 1
    are drawn bold red.
    """
    if isinstance(g, CosetGraph):
        return _coset_dot(g, highlight)
    tails = _highlight_tails(g, highlight)
    order = sorted(range(len(g)), key=lambda v: _label(g.perms[v]))
    lines = [f"digraph Xi_{g.n} {{"]
    lines += [f'  "{_label(g.perms[v])}";' for v in order]
    for v in order:
        for b in (0, 1):
            w = g.succ[b][v]
            style = ", style=bold, color=red" if (v, b) in tails else ""
            lines.append(f'  "{_label(g.perms[v])}" -> "{_label(g.perms[w])}" [label={b}{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _coset_dot(q: CosetGraph, highlight: Sequence[int] | None) -> str:
    tails = _highlight_tails(q.cayley, highlight)
    used = {q.edge_of_tail(v) for v, b in tails if b == 0}
    names = [_label(q.representative(c)) for c in range(len(q))]
    lines = [f"graph Q_{q.n} {{"]
    lines += [f'  "{name}";' for name in sorted(names)]
    edges = sorted(tuple(sorted((names[a], names[b]))) for a, b in q.distinct_edges())
    lookup = {tuple(sorted((names[a], names[b]))) for a, b in used}
    for x, y in edges:
        style = " [style=bold, color=red]" if (x, y) in lookup else ""
        lines.append(f'  "{x}" -- "{y}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"
