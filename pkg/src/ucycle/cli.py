"""Command-line interface: ``ucycle <command> [options]``."""
from __future__ import annotations

import argparse
import itertools
import math
import sys
from typing import Iterable, Sequence, TextIO

from ucycle import graphoracle, permstream, rankstat, seqcore
from ucycle.seqcore import ResourceLimitError

METHODS = ("recursive", "counting", "loopless")
FORMATS = ("compact", "lines", "csv")
CHUNK = 4096
STATS_COUNT_N_MAX = 10


def _bits(n: int, method: str) -> Iterable[int]:
    if method == "recursive":
        return seqcore.build_s_recursive(n)
    if method == "counting":
        return seqcore.counting_stream(n)
    return seqcore.loopless_stream(n)


def _positions(n: int, method: str) -> Iterable[int]:
    if method == "recursive":
        return seqcore.build_r_recursive(n)
    if method == "counting":
        return seqcore.position_stream(n)
    return seqcore.gray_position_stream(n)


def _write_symbols(out: TextIO, symbols: Iterable[int], fmt: str, wide: bool) -> None:
    """Stream symbols in fixed-size chunks so memory does not grow with output length."""
    if fmt == "lines":
        sep, end = "\n", "\n"
    elif fmt == "csv":
        sep, end = ",", "\n"
    else:
        sep, end = (" " if wide else ""), "\n"
    it = iter(symbols)
    first = True
    while True:
        chunk = list(itertools.islice(it, CHUNK))
        if not chunk:
            break
        if not first:
            out.write(sep)
        out.write(sep.join(map(str, chunk)))
        first = False
    out.write(end)


def _write_perms(out: TextIO, perms: Iterable[Sequence[int]], fmt: str, wide: bool) -> None:
    sep = "," if fmt == "csv" else (" " if wide else "")
    for p in perms:
        out.write(sep.join(map(str, p)))
        out.write("\n")


def _parse_perm(text: Sequence[str]) -> tuple[int, ...]:
    parts = [t for chunk in text for t in chunk.replace(",", " ").split()]
    if len(parts) == 1 and len(parts[0]) > 1:
        parts = list(parts[0])
    try:
        return tuple(int(x) for x in parts)
    except ValueError:
        raise ValueError(f"cannot parse permutation from {' '.join(text)!r}") from None


def _limited(it: Iterable, limit: int | None) -> Iterable:
    return it if limit is None else itertools.islice(it, limit)


def cmd_bits(args, out: TextIO) -> int:
    _write_symbols(out, _limited(_bits(args.n, args.method), args.limit), args.format, False)
    return 0


def cmd_rseq(args, out: TextIO) -> int:
    _write_symbols(out, _limited(_positions(args.n, args.method), args.limit), args.format, args.n > 10)
    return 0


def cmd_ucycle(args, out: TextIO) -> int:
    symbols = permstream.ucycle_stream(args.n, _bits(args.n, args.method))
    _write_symbols(out, _limited(symbols, args.limit), args.format, args.n > 9)
    return 0


def cmd_perms(args, out: TextIO) -> int:
    if args.method == "recursive":
        perms = permstream.pi_list(args.n)
    else:
        perms = permstream.perm_stream(args.n, _bits(args.n, args.method))
    _write_perms(out, _limited(perms, args.limit), args.format, args.n > 9)
    return 0


def cmd_rank(args, out: TextIO) -> int:
    out.write(f"{rankstat.rank(_parse_perm(args.perm))}\n")
    return 0


def cmd_unrank(args, out: TextIO) -> int:
    p = rankstat.unrank(args.n, args.r)
    _write_perms(out, [p], args.format, args.n > 9)
    return 0


def cmd_stats(args, out: TextIO) -> int:
    n = args.n
    seqcore.check_order(n, n_max=seqcore.STREAM_N_MAX, guard="STREAM_N_MAX")
    f = rankstat.sigma_n_count(n)
    out.write(f"n {n}\n")
    out.write(f"length {math.factorial(n)}\n")
    out.write(f"f_n {f}\n")
    if n >= 3:
        out.write(f"min_sigma_edges {rankstat.min_sigma_edges(n)}\n")
    if n <= STATS_COUNT_N_MAX:
        zeros = ones = 0
        for b in _bits(n, args.method):
            if b:
                ones += 1
            else:
                zeros += 1
        out.write(f"zeros {zeros}\nones {ones}\n")
        if zeros != f:
            out.write("count mismatch: zeros != f_n\n")
            return 1
    else:
        out.write(f"zeros/ones not counted above n={STATS_COUNT_N_MAX}\n")
    return 0


def cmd_verify(args, out: TextIO) -> int:
    n = args.n
    seqcore.check_order(n, n_max=graphoracle.GRAPH_N_MAX, guard="GRAPH_N_MAX")
    bits = bytes(_bits(n, args.method))
    checks = [("hamilton", graphoracle.validate_hamilton(bits, n))]
    checks.append(("universal", graphoracle.verify_universal(list(permstream.ucycle_stream(n, bits)), n)))
    if n >= 3:
        flat = [x for p in permstream.perm_stream(n, bits) for x in p]
        checks.append(("multiversal", graphoracle.verify_multiversal(flat, n)))
        checks.append(("shift_lemma", graphoracle.check_shift_lemma(flat, n)))
    if args.bruteforce:
        res = graphoracle.min_hamilton_sigma_edges_bruteforce(n, budget=args.budget)
        if not res.conclusive:
            out.write(f"min_sigma_edges inconclusive after {res.elapsed:.1f}s\n")
        else:
            checks.append(("min_sigma_edges", res.minimum == rankstat.min_sigma_edges(n)))
    ok = True
    for name, result in checks:
        ok = ok and bool(result)
        out.write(f"{'PASS' if result else 'FAIL'} {name}\n")
    return 0 if ok else 1


def cmd_dot(args, out: TextIO) -> int:
    g = graphoracle.build_cayley(args.n)
    if args.graph == "coset":
        g = graphoracle.build_coset_graph(args.n, g)
    highlight = seqcore.build_s_recursive(args.n) if args.highlight else None
    out.write(graphoracle.export_dot(g, highlight))
    return 0


def cmd_bench(args, out: TextIO) -> int:
    out.write("n,bits,max_ops,mean_ops\n")
    for n in range(args.n_min, args.n_max + 1):
        prof = seqcore.loopless_op_profile(n)
        out.write(f"{n},{prof.bits},{prof.max_ops},{prof.mean_ops:.4f}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ucycle", description="Universal cycles for (n-1)-permutations of an n-set.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, *, n: bool = True, method: bool = False, fmt: bool = False, limit: bool = False):
        p = sub.add_parser(name, help=help)
        if n:
            p.add_argument("--n", type=int, required=True)
        if method:
            p.add_argument("--method", choices=METHODS, default="loopless")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="compact")
        if limit:
            p.add_argument("--limit", type=int, default=None, help="stop after this many symbols")
        p.set_defaults(func=func)
        return p

    add("bits", cmd_bits, "rotation bits S_n", method=True, fmt=True, limit=True)
    add("rseq", cmd_rseq, "change positions R_n", method=True, fmt=True, limit=True)
    add("ucycle", cmd_ucycle, "universal cycle U_n", method=True, fmt=True, limit=True)
    add("perms", cmd_perms, "all permutations in cycle order", method=True, fmt=True, limit=True)
    p = add("rank", cmd_rank, "rank of a permutation", n=False)
    p.add_argument("perm", nargs="+")
    p = add("unrank", cmd_unrank, "permutation of a given rank", fmt=True)
    p.add_argument("r", type=int)
    add("stats", cmd_stats, "sigma_n counts and bit statistics", method=True)
    p = add("verify", cmd_verify, "run the oracle checks", method=True)
    p.add_argument("--bruteforce", action="store_true", help="also search for the least sigma_n edge count")
    p.add_argument("--budget", type=float, default=None, help="seconds allowed for --bruteforce")
    p = add("dot", cmd_dot, "graph in DOT syntax")
    p.add_argument("--graph", choices=("cayley", "coset"), default="cayley")
    p.add_argument("--highlight", action="store_true", help="mark the edges of the Hamilton cycle")
    p = add("bench", cmd_bench, "per-bit operation counts of the loopless generator", n=False)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "limit", None) is not None and args.limit < 0:
        err.write("ucycle: --limit must be non-negative\n")
        return 2
    try:
        return args.func(args, out)
    except ResourceLimitError as exc:
        err.write(f"ucycle: refused: {exc}\n")
        return 2
    except (ValueError, TypeError) as exc:
        err.write(f"ucycle: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
