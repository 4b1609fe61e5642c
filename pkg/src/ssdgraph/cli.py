"""``ssdgraph`` command-line front end.

Set streams go to stdout one set per line (sorted, space separated);
reports are JSON.  Exit status: 0 success, 2 when the input does not meet
a command's precondition (the diagnosis is printed on stderr), 1 on any
other error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence, TextIO

from .bench import DEFAULT_OUTPUTS, bench
from .decomp import classify, maxpss_of_any_digraph, scan_minrs
from .dominators import build_dominator_tree
from .enumeration import iter_strong_subgraphs
from .errors import GraphError, PreconditionError, SizeGuardError
from .graph import Digraph, parse_edge_list, transpose
from .hamiltonian import hamiltonian_cycle, hamiltonian_via_spanning_subgraph, minrs_disjoint_making_edge

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DIAGNOSIS = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _load(path: str) -> Digraph:
    if path == "-":
        return parse_edge_list(sys.stdin.buffer.read())
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read())


def _resolve(g: Digraph, token: str) -> int:
    """A vertex given either by label or by numeric id."""
    if g.labels is not None and token in g.labels:
        return g.labels.index(token)
    try:
        v = int(token)
    except ValueError:
        raise PreconditionError(f"unknown vertex {token!r}") from None
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range for a graph with {g.n} vertices")
    return v


def _names(g: Digraph, vs: Iterable[int]) -> list[str]:
    return [g.label(v) for v in vs]


def _line(g: Digraph, vs: Iterable[int]) -> str:
    return " ".join(_names(g, vs))


def _emit_sets(g: Digraph, sets: Sequence[Iterable[int]], as_json: bool, out: TextIO) -> None:
    if as_json:
        json.dump([_names(g, s) for s in sets], out)
        out.write("\n")
    else:
        for s in sets:
            out.write(_line(g, s) + "\n")


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    c = classify(g)
    json.dump({"kind": c.kind.value, "minrs_witnesses": [_names(g, p.vertices) for p in c.witnesses]}, out)
    out.write("\n")
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    sets = [sorted(x) for x in maxpss_of_any_digraph(g)]
    _emit_sets(g, sets, args.json, out)
    return EXIT_OK


def cmd_minrs(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    scan = scan_minrs(g, _resolve(g, args.root))
    _emit_sets(g, [p.vertices for p in scan.paths], args.json, out)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    if args.limit is not None and args.limit < 0:
        raise PreconditionError("--limit must be non-negative")
    count = 0
    for s in iter_strong_subgraphs(g):
        if args.limit is not None and count >= args.limit:
            break
        count += 1
        if not args.count_only:
            out.write(_line(g, sorted(s)) + "\n")
    if args.count_only:
        out.write(json.dumps({"count": count}) + "\n" if args.json else f"{count}\n")
    return EXIT_OK


def cmd_hamiltonian(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    cycle = hamiltonian_cycle(g)
    if args.json:
        json.dump({"cycle": _names(g, cycle)}, out)
        out.write("\n")
    else:
        out.write(_line(g, cycle) + "\n")
    return EXIT_OK


def cmd_hamiltonian_search(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    if args.budget < 1:
        raise PreconditionError("--budget must be positive")
    res = hamiltonian_via_spanning_subgraph(g, args.budget)
    if args.json:
        cycle = _names(g, res.cycle) if res.cycle is not None else None
        json.dump({"status": res.status, "cycle": cycle, "nodes": res.nodes}, out)
        out.write("\n")
    elif res.cycle is not None:
        out.write(_line(g, res.cycle) + "\n")
    else:
        out.write(res.status + "\n")
    if res.status != "found":
        print(f"no cycle: search {res.status} after {res.nodes} nodes", file=sys.stderr)
        return EXIT_DIAGNOSIS
    return EXIT_OK


def cmd_augment(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    u, v = minrs_disjoint_making_edge(g)
    out.write(f"{g.label(u)} {g.label(v)}\n")
    return EXIT_OK


def cmd_dominator_tree(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    root = _resolve(g, args.root)
    tree = build_dominator_tree(transpose(g) if args.transpose else g, root)
    for v in range(g.n):
        if not tree.is_root(v):
            out.write(f"{g.label(v)} {g.label(tree.parent[v])}\n")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args.file)
    if args.repetitions < 0 or args.outputs < 1:
        raise PreconditionError("--repetitions must be >= 0 and --outputs >= 1")
    report = bench(g, args.repetitions, outputs=args.outputs, path=args.file)
    json.dump(report.to_dict(), out)
    out.write("\n")
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace, out: TextIO) -> int:
    # the brute-force oracle is only loaded here
    from .corpus import env_seed, random_digraphs
    from .decomp import maxpss_all
    from .oracle import brute_maxpss_masks, brute_solutions, to_mask

    seed = env_seed()
    checked = failures = 0
    for g in random_digraphs(args.count, seed, n_range=(2, 7)):
        system = brute_solutions(g)
        got = sorted(to_mask(s) for s in iter_strong_subgraphs(g))
        ok = got == list(system.solutions)
        full = (1 << g.n) - 1
        if full in system.solution_set:
            _, xs = maxpss_all(g)
            ok = ok and sorted(to_mask(x) for x in xs) == brute_maxpss_masks(system, full)
        checked += 1
        if not ok:
            failures += 1
            print(f"mismatch on arcs {g.arcs()}", file=sys.stderr)
    json.dump({"seed": seed, "graphs": checked, "failures": failures}, out)
    out.write("\n")
    return EXIT_OK if failures == 0 else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ssdgraph", description="Strongly connected decomposition and enumeration for digraphs.")
    parser.add_argument("--json", action="store_true", help="JSON output for set-valued commands")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, help_: str, *, file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        if file:
            p.add_argument("file", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "which disjointness property holds")
    add("decompose", cmd_decompose, "all maximal proper strongly connected subsets")
    p = add("minrs", cmd_minrs, "minimal removable sets avoiding a root")
    p.add_argument("--root", default="0")
    p = add("enumerate", cmd_enumerate, "every strongly connected induced subgraph")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    add("hamiltonian", cmd_hamiltonian, "Hamiltonian cycle of a MaxPSS-disjoint graph")
    p = add("hamiltonian-search", cmd_hamiltonian_search, "budgeted spanning-subgraph search")
    p.add_argument("--budget", type=int, default=10**6)
    add("augment", cmd_augment, "an arc whose addition makes the graph MinRS-disjoint")
    p = add("dominator-tree", cmd_dominator_tree, "print 'child parent' lines")
    p.add_argument("--root", default="0")
    p.add_argument("--transpose", action="store_true")
    p = add("bench", cmd_bench, "timing and delay report")
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--outputs", type=int, default=DEFAULT_OUTPUTS, help="enumeration outputs to profile")
    p = add("selftest", cmd_selftest, "compare against brute force on a seeded random corpus (SSD_SEED)", file=False)
    p.add_argument("--count", type=int, default=200)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    stream = sys.stdout if out is None else out
    try:
        return args.func(args, stream)
    except PreconditionError as exc:
        print(f"ssdgraph {args.command}: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSIS
    except BrokenPipeError:
        return EXIT_OK
    except (GraphError, SizeGuardError, OSError) as exc:
        print(f"ssdgraph {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
