"""Command-line front door.

Subcommands: gen, named, free, cycle, closure, verify, convert.  Graphs move
between commands as graph6, one per line, on stdout/stdin (``--in -``).
Usage errors exit 64; malformed input data exits 65; ``verify`` exits with
0 = verified, 1 = violated, 2 = resource exhausted.
"""
from __future__ import annotations

import argparse
import sys
from typing import Iterator, Sequence

from . import verify as verify_mod
from . import zoo
from .closure import closure
from .cycles import (
    ResourceExhausted,
    dominating_cycle,
    every_longest_cycle_dominating,
    hamiltonian_cycle,
    longest_cycle,
)
from .enumeration import read_graph6, write_graph6
from .graphs import Graph
from .iso import induced_copy

EX_USAGE = 64
EX_DATAERR = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits 2; the contract is 64
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _read_graphs(source: str) -> Iterator[Graph]:
    if source == "-":
        lines = sys.stdin
        where = "<stdin>"
    else:
        lines = open(source, "r", encoding="ascii")
        where = source
    with lines if source != "-" else _nullcontext(lines) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield read_graph6(line)
            except ValueError as exc:
                raise ValueError(f"{where}:{lineno}: {exc}") from None


class _nullcontext:
    def __init__(self, obj):
        self.obj = obj

    def __enter__(self):
        return self.obj

    def __exit__(self, *a):
        return False


def _fmt_cycle(cycle: tuple[int, ...] | None) -> str:
    if not cycle:
        return "none"
    return " ".join(str(v) for v in cycle)


# ---------------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------------


def _cmd_gen(args) -> int:
    try:
        g = zoo.make_family(args.family, s=args.s, sp=args.sp, t=args.t)
    except ValueError as exc:  # missing or out-of-range parameters
        raise _UsageError(str(exc)) from None
    print(write_graph6(g))
    return 0


def _cmd_named(args) -> int:
    try:
        g = zoo.make_named(args.graph, l=args.l, m=args.m, n=args.n)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    print(write_graph6(g))
    return 0


def _cmd_free(args) -> int:
    if args.set is not None:
        members = zoo.forbidden_pairs()[args.set]
    else:
        members = tuple(_read_graphs(args.graphs_file))
        if not members:
            raise _UsageError(f"no graphs in {args.graphs_file}")
    for g in _read_graphs(args.infile):
        free = all(induced_copy(g, h) is None for h in members)
        print("true" if free else "false")
    return 0


def _cmd_cycle(args) -> int:
    for g in _read_graphs(args.infile):
        if args.mode == "longest":
            cyc = longest_cycle(g)
            print(f"{len(cyc) if cyc else 0} {_fmt_cycle(cyc)}".rstrip())
        elif args.mode == "hamilton":
            print(_fmt_cycle(hamiltonian_cycle(g)))
        elif args.mode == "dominating":
            print(_fmt_cycle(dominating_cycle(g)))
        else:  # all-longest-dominating
            ok, bad = every_longest_cycle_dominating(g)
            print("true" if ok else f"false {_fmt_cycle(bad)}")
    return 0


def _cmd_closure(args) -> int:
    for g in _read_graphs(args.infile):
        result = closure(g)
        if args.trace:
            for v, added in result.trace:
                pretty = " ".join(f"{u}-{w}" for u, w in added)
                print(f"completed neighborhood of {v}: added {pretty}", file=sys.stderr)
        print(write_graph6(result.graph))
    return 0


def _cmd_verify(args) -> int:
    if args.theorem == "NECESSITY-SCAN":
        report = verify_mod.verify_necessity_scan(k_max=min(args.smax or 6, 6))
    else:
        report = verify_mod.run(
            args.theorem,
            n_max=args.nmax,
            s_max=args.smax if args.smax is not None else 7,
            jobs=args.jobs,
            seed=args.seed,
        )
    for line in report.summary_lines():
        print(line)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
        print(f"report written to {args.report}", file=sys.stderr)
    return report.exit_code


def _edge_list_lines(g: Graph) -> Iterator[str]:
    yield f"{g.n} {g.m}"
    for u, v in g.edges():
        yield f"{u} {v}"


def _read_edge_list(path: str) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        tokens: list[str] = []
        for line in fh:
            body = line.split("#", 1)[0].strip()
            if body:
                tokens.extend(body.split())
    i = 0
    while i < len(tokens):
        try:
            n, m = int(tokens[i]), int(tokens[i + 1])
            ends = tokens[i + 2 : i + 2 + 2 * m]
            if len(ends) < 2 * m:
                raise IndexError
            edges = [(int(ends[2 * k]), int(ends[2 * k + 1])) for k in range(m)]
        except (IndexError, ValueError):
            raise ValueError(f"{path}: malformed edge list near token {i}") from None
        yield Graph.from_edges(n, edges)
        i += 2 + 2 * m


def _cmd_convert(args) -> int:
    def kind(path: str) -> str:
        if path.endswith((".g6", ".graph6")):
            return "graph6"
        if path.endswith((".txt", ".edges", ".el")):
            return "edges"
        raise _UsageError(f"cannot infer format of {path!r} (use .g6/.graph6 or .txt/.edges/.el)")

    src, dst = kind(args.infile), kind(args.outfile)
    graphs = _read_graphs(args.infile) if src == "graph6" else _read_edge_list(args.infile)
    count = 0
    with open(args.outfile, "w", encoding="ascii") as fh:
        for g in graphs:
            if dst == "graph6":
                fh.write(write_graph6(g) + "\n")
            else:
                fh.write("\n".join(_edge_list_lines(g)) + "\n\n")
            count += 1
    print(f"converted {count} graph(s)", file=sys.stderr)
    return 0


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(
        prog="domcycle",
        description="Forbidden pairs, dominating cycles, closures, and exhaustive checks.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[], help="construct a family member, print graph6")
    p.add_argument(
        "--family",
        required=True,
        choices=["A", "Ap", "App", "A1", "A2", "A3", "A4", "A5", "Fsst", "F1", "F2", "F3", "F4"],
    )
    p.add_argument("--s", type=int, default=None, help="family parameter")
    p.add_argument("--sp", type=int, default=None, help="second clique order (Fsst)")
    p.add_argument("--t", type=int, default=None, help="bridge-triangle count (Fsst)")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("named", help="construct a named small graph, print graph6")
    p.add_argument(
        "--graph",
        required=True,
        choices=["K13", "K13s", "K13ss", "P", "Z", "B", "N", "W", "Ws", "K4m"],
    )
    p.add_argument("--l", type=int, default=None, help="first leg length (N)")
    p.add_argument("--m", type=int, default=None, help="second leg length (B, N)")
    p.add_argument("--n", type=int, default=None, help="path order / leg length (P, Z, B, N)")
    p.set_defaults(fn=_cmd_named)

    p = sub.add_parser("free", help="decide induced-subgraph freeness per input graph")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", choices=sorted(zoo.forbidden_pairs()), help="named forbidden pair")
    grp.add_argument("--graphs-file", help="graph6 file listing the forbidden graphs")
    p.add_argument("--in", dest="infile", required=True, help="graph6 file, or - for stdin")
    p.set_defaults(fn=_cmd_free)

    p = sub.add_parser("cycle", help="cycle searches per input graph")
    p.add_argument(
        "--mode",
        required=True,
        choices=["longest", "hamilton", "dominating", "all-longest-dominating"],
    )
    p.add_argument("--in", dest="infile", required=True, help="graph6 file, or - for stdin")
    p.set_defaults(fn=_cmd_cycle)

    p = sub.add_parser("closure", help="claw-free closure per input graph, print graph6")
    p.add_argument("--in", dest="infile", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--trace", action="store_true", help="log completed vertices to stderr")
    p.set_defaults(fn=_cmd_closure)

    p = sub.add_parser("verify", help="run an exhaustive check, exit 0/1/2")
    p.add_argument(
        "--theorem",
        required=True,
        choices=list(verify_mod.THEOREM_IDS) + ["NECESSITY-SCAN"],
    )
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--smax", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", default=None, help="write the full JSON report here")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("convert", help="convert between graph6 and edge-list files")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(fn=_cmd_convert)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"domcycle {args.command}: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except (ValueError, OSError) as exc:
        print(f"domcycle {args.command}: {exc}", file=sys.stderr)
        return EX_DATAERR
    except ResourceExhausted as exc:
        print(f"domcycle {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
