"""``cocolp`` command line.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 ok, 1 usage or
input error, 2 precondition failure (the witness is printed), 3 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FsPath

from . import bench as benchmod
from .errors import CocolpError, InternalConsistencyError, OrderingError
from .generators import FAMILIES, GenSpec, generate
from .graph import Graph, format_graph, format_vertex_line, is_valid_path, parse_graph, parse_vertex_line
from .longest_path import solve
from .oracle import brute_is_maximal_path, brute_longest_path, brute_min_path_cover
from .orderings import check_ordering, find_bad_triple, is_i_ordering, is_umbrella_free
from .search import ldfs, ldfs_plus, min_path_cover, rmn


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return FsPath(path).read_text()
    except OSError as exc:
        raise CocolpError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        FsPath(path).write_text(text)
    except OSError as exc:
        raise CocolpError(f"cannot write {path}: {exc.strerror}") from None


def _load_graph(args) -> Graph:
    return parse_graph(_read(args.graph))


def _load_ordering(g: Graph, path: str):
    return check_ordering(g, parse_vertex_line(_read(path), g))


def _emit_ordering(g: Graph, seq) -> None:
    seq = tuple(seq)
    check_ordering(g, seq)
    print(format_vertex_line(g, seq))


def _emit_paths(g: Graph, cover) -> None:
    try:
        cover.validate(g)
    except ValueError as exc:
        raise InternalConsistencyError(str(exc)) from None
    for p in cover:
        print(format_vertex_line(g, p))


def _witness(g: Graph, w) -> str:
    return f"{w.kind.value} {g.label(w.a)} {g.label(w.b)} {g.label(w.c)}"


# --------------------------------------------------------------------------- #
# subcommands


def cmd_gen(args) -> int:
    spec = GenSpec(args.family, args.n, args.p, args.seed)
    g, order = generate(spec)
    _write(args.out_graph, format_graph(g))
    _write(args.out_ordering, format_vertex_line(g, order) + "\n")
    return 0


def cmd_check_ordering(args) -> int:
    g = _load_graph(args)
    sigma = _load_ordering(g, args.ordering)
    if args.kind == "interval":
        ok, w = is_i_ordering(g, sigma)
    elif args.kind == "umbrella":
        ok, w = is_umbrella_free(g, sigma)
    else:
        w = find_bad_triple(g, sigma)
        ok = w is None
    if ok:
        print("ok")
        return 0
    print(_witness(g, w))
    print(f"ordering fails the {args.kind} check", file=sys.stderr)
    return 2


def cmd_ldfs(args) -> int:
    g = _load_graph(args)
    try:
        start = g.vertex_of(args.start)
    except KeyError:
        raise OrderingError(f"unknown start vertex {args.start!r}") from None
    _emit_ordering(g, ldfs(g, start))
    return 0


def cmd_ldfs_plus(args) -> int:
    g = _load_graph(args)
    _emit_ordering(g, ldfs_plus(g, _load_ordering(g, args.pi)))
    return 0


def cmd_rmn(args) -> int:
    g = _load_graph(args)
    res = rmn(g, _load_ordering(g, args.sigma))
    if args.cover:
        _emit_paths(g, res.cover)
    else:
        _emit_ordering(g, res.ordering)
    return 0


def cmd_min_path_cover(args) -> int:
    g = _load_graph(args)
    cover = min_path_cover(g, _load_ordering(g, args.pi))
    _emit_paths(g, cover)
    print(f"{len(cover)} paths", file=sys.stderr)
    return 0


def cmd_longest_path(args) -> int:
    g = _load_graph(args)
    pi = _load_ordering(g, args.pi)
    res = solve(g, pi, check=not args.skip_checks, max_n=args.max_n)
    ok, idx = is_valid_path(g, res.path)
    if not ok:
        raise InternalConsistencyError(f"result is not a path (index {idx})")
    print(format_vertex_line(g, res.path))
    print(f"length {res.length}")
    if args.emit_table:
        rows = ["position,vertex,length"]
        if res.table is not None:
            for k, length in enumerate(res.table.final_lengths(), start=1):
                rows.append(f"{k},{g.label(res.sigma[k - 1])},{length}")
        _write(args.emit_table, "\n".join(rows) + "\n")
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    if args.what == "longest":
        p = brute_longest_path(g, cap=args.cap or 14)
        print(format_vertex_line(g, p))
        print(f"length {len(p)}")
    elif args.what == "cover":
        _emit_paths(g, brute_min_path_cover(g, cap=args.cap or 10))
    else:
        if not args.path:
            raise CocolpError("oracle maximal needs --path")
        p = parse_vertex_line(_read(args.path), g)
        ok, idx = is_valid_path(g, p)
        if not ok:
            raise CocolpError(f"--path is not a path of the graph (index {idx})")
        maximal = brute_is_maximal_path(g, p, cap=args.cap or 10)
        print("maximal" if maximal else "not maximal")
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    seeds = range(args.seed_base, args.seed_base + args.seeds)
    records = benchmod.bench(sizes, args.family, args.p, seeds, checks=args.with_checks, jobs=args.jobs, max_n=args.max_n)
    text = benchmod.to_csv(records, benchmod.scaling_summary(records))
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


# --------------------------------------------------------------------------- #


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cocolp", description="Longest paths and path covers of cocomparability graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a random instance with a certified ordering")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out-graph", required=True)
    p.add_argument("--out-ordering", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check-ordering", help="test an ordering against a characterisation")
    p.add_argument("--kind", choices=("interval", "umbrella", "ldfs"), required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--ordering", required=True)
    p.set_defaults(func=cmd_check_ordering)

    p = sub.add_parser("ldfs", help="generic LDFS from a start vertex")
    p.add_argument("--graph", required=True)
    p.add_argument("--start", required=True)
    p.set_defaults(func=cmd_ldfs)

    p = sub.add_parser("ldfs-plus", help="LDFS with ties broken rightmost in pi")
    p.add_argument("--graph", required=True)
    p.add_argument("--pi", required=True)
    p.set_defaults(func=cmd_ldfs_plus)

    p = sub.add_parser("rmn", help="rightmost-neighbor sweep")
    p.add_argument("--graph", required=True)
    p.add_argument("--sigma", required=True)
    p.add_argument("--cover", action="store_true", help="print the path cover instead of the ordering")
    p.set_defaults(func=cmd_rmn)

    p = sub.add_parser("min-path-cover", help="minimum path cover from an umbrella-free ordering")
    p.add_argument("--graph", required=True)
    p.add_argument("--pi", required=True)
    p.set_defaults(func=cmd_min_path_cover)

    p = sub.add_parser("longest-path", help="longest path from an umbrella-free ordering")
    p.add_argument("--graph", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--skip-checks", action="store_true")
    p.add_argument("--emit-table", metavar="CSV", help="write l(u_k; 1, n) per position to CSV")
    p.add_argument("--max-n", type=int, help="override the table size guard")
    p.set_defaults(func=cmd_longest_path)

    p = sub.add_parser("oracle", help="exponential exact references (small n only)")
    p.add_argument("what", choices=("longest", "cover", "maximal"))
    p.add_argument("--graph", required=True)
    p.add_argument("--path")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time the table fill across sizes and seeds")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--seeds", type=int, required=True, help="number of seeds per size")
    p.add_argument("--seed-base", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--with-checks", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except CocolpError as exc:
        print(f"cocolp {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"cocolp {args.command}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
