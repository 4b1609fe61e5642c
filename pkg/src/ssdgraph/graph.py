"""Immutable simple digraphs over dense 0-based vertex ids.

Vertex sets are passed around as ``frozenset[int]``; anything that
prints or compares families sorts them first so output is stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphError, GraphFormatError, SelfLoopError
from .work import charge

VertexSet = frozenset


@dataclass(frozen=True)
class Digraph:
    """A simple directed graph with both adjacency directions stored.

    Build instances with :meth:`from_arcs` or :func:`parse_edge_list`; the
    constructor trusts its arguments.
    """

    n: int
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_arcs(
        cls,
        n: int,
        arcs: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Digraph:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        outs: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise SelfLoopError(u)
            outs[u].add(v)
        ins: list[list[int]] = [[] for _ in range(n)]
        for u in range(n):
            for v in outs[u]:
                ins[v].append(u)
        if labels is not None:
            if len(labels) != n:
                raise GraphError(f"expected {n} labels, got {len(labels)}")
            labels = tuple(labels)
        return cls(
            n,
            tuple(tuple(sorted(s)) for s in outs),
            tuple(tuple(sorted(s)) for s in ins),
            labels,
        )

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.out_adj)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out_adj[u]]

    def has_arc(self, u: int, v: int) -> bool:
        adj = self.out_adj[u]
        # adjacency is sorted; a linear scan is fine for the degrees seen here
        return v in adj

    def vertices(self) -> range:
        return range(self.n)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def with_arc(self, u: int, v: int) -> Digraph:
        return Digraph.from_arcs(self.n, [*self.arcs(), (u, v)], self.labels)

    def without_arcs(self, removed: Iterable[tuple[int, int]]) -> Digraph:
        drop = set(removed)
        return Digraph.from_arcs(self.n, [a for a in self.arcs() if a not in drop], self.labels)


def parse_edge_list(text: str | bytes) -> Digraph:
    """Parse the line-oriented edge-list format.

    Recognised lines::

        # comment
        p <n> <m>          optional header, at most once, before any arc
        v <id> <label>     optional vertex label
        <u> <v>            arc u -> v

    Without a header ``n`` is one more than the largest id seen.  Duplicate
    arcs are merged; self-loops are rejected.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    arcs: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    header: tuple[int, int] | None = None
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate 'p' header", lineno)
            if arcs:
                raise GraphFormatError("'p' header must precede all arcs", lineno)
            if len(parts) != 3:
                raise GraphFormatError("header must read 'p <n> <m>'", lineno)
            header = (_int(parts[1], lineno), _int(parts[2], lineno))
            continue
        if parts[0] == "v":
            if len(parts) < 3:
                raise GraphFormatError("label line must read 'v <id> <label>'", lineno)
            vid = _int(parts[1], lineno)
            if vid < 0:
                raise GraphFormatError(f"negative vertex id {vid}", lineno)
            labels[vid] = " ".join(parts[2:])
            max_id = max(max_id, vid)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u < 0 or v < 0:
            raise GraphFormatError("vertex ids must be non-negative", lineno)
        if u == v:
            raise SelfLoopError(u, lineno)
        arcs.append((u, v))
        max_id = max(max_id, u, v)

    n = max_id + 1
    if header is not None:
        hn, hm = header
        if max_id >= hn:
            raise GraphFormatError(f"vertex id {max_id} exceeds header vertex count {hn}")
        if hm != len(arcs):
            raise GraphFormatError(f"header declares {hm} arcs but {len(arcs)} were listed")
        n = hn
    label_seq = None
    if labels:
        label_seq = [labels.get(v, str(v)) for v in range(n)]
    return Digraph.from_arcs(n, arcs, label_seq)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"not an integer: {token!r}", lineno) from None


def format_edge_list(g: Digraph) -> str:
    lines = [f"p {g.n} {g.m}"]
    if g.labels is not None:
        lines += [f"v {v} {g.labels[v]}" for v in range(g.n)]
    lines += [f"{u} {v}" for u, v in g.arcs()]
    return "\n".join(lines) + "\n"


def transpose(g: Digraph) -> Digraph:
    return Digraph(g.n, g.in_adj, g.out_adj, g.labels)


def induced_subgraph(g: Digraph, s: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Return ``(G[s], ids)`` where ``ids[local] == original``.

    Local ids follow ascending original ids, so local vertex 0 is ``min(s)``.
    """
    ids = tuple(sorted(s))
    if not ids:
        raise GraphError("induced subgraph of an empty vertex set")
    local = {v: i for i, v in enumerate(ids)}
    outs: list[tuple[int, ...]] = []
    ins: list[list[int]] = [[] for _ in ids]
    scanned = 0
    for i, v in enumerate(ids):
        adj = g.out_adj[v]
        scanned += len(adj)
        row = tuple(local[w] for w in adj if w in local)
        outs.append(row)
        for j in row:
            ins[j].append(i)
    charge(len(ids) + scanned)
    labels = tuple(g.labels[v] for v in ids) if g.labels is not None else None
    return Digraph(len(ids), tuple(outs), tuple(tuple(r) for r in ins), labels), ids


def strongly_connected_components(g: Digraph) -> list[frozenset[int]]:
    """Tarjan's algorithm, iterative.  Components ordered by smallest member."""
    n = g.n
    adj = g.out_adj
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            nbrs = adj[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    charge(n + g.m)
    comps.sort(key=min)
    return comps


def is_strongly_connected(g: Digraph) -> bool:
    if g.n <= 1:
        return True
    return len(_reach(g.out_adj, 0)) == g.n and len(_reach(g.in_adj, 0)) == g.n


def _reach(adj: Sequence[Sequence[int]], start: int) -> set[int]:
    seen = {start}
    todo = [start]
    touched = 1
    while todo:
        v = todo.pop()
        touched += len(adj[v])
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    charge(touched)
    return seen


def reachable(g: Digraph, start: int, *, reverse: bool = False) -> set[int]:
    return _reach(g.in_adj if reverse else g.out_adj, start)


def component_of(g: Digraph, v: int, allowed_from: int = 0) -> frozenset[int]:
    """SCC of ``v`` in the subgraph induced by ids ``>= allowed_from``."""
    fwd = _bounded_reach(g.out_adj, v, allowed_from)
    bwd = _bounded_reach(g.in_adj, v, allowed_from)
    return frozenset(fwd & bwd)


def _bounded_reach(adj: Sequence[Sequence[int]], start: int, lo: int) -> set[int]:
    seen = {start}
    todo = [start]
    touched = 1
    while todo:
        v = todo.pop()
        touched += len(adj[v])
        for w in adj[v]:
            if w >= lo and w not in seen:
                seen.add(w)
                todo.append(w)
    charge(touched)
    return seen


# Small constructors used by tests, the CLI self-test and benchmarks.


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise GraphError("a directed cycle needs at least 2 vertices")
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def complete_digraph(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if u != v])
