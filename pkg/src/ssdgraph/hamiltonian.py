"""Hamiltonian cycles of strongly connected MaxPSS-disjoint digraphs.

When the MaxPSSs of ``G`` partition ``V``, every simple cycle of the
class graph (one node per MaxPSS) visits all classes, and every simple
cycle of ``G`` that meets all classes visits all vertices.  So any cycle
in the class graph, expanded by an arbitrary simple path through each
class, is a Hamiltonian cycle of ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .decomp import classify, maxpss_all
from .errors import InternalError, NotStronglyConnectedError, PreconditionError
from .graph import Digraph, is_strongly_connected


@dataclass(frozen=True)
class ClassGraph:
    classes: tuple[frozenset[int], ...]
    class_of: tuple[int, ...]
    # (i, j) -> first arc (u, v) of G found with u in class i and v in class j
    witness: dict[tuple[int, int], tuple[int, int]]

    @property
    def q(self) -> int:
        return len(self.classes)

    def successors(self, i: int) -> list[int]:
        return sorted(j for (a, j) in self.witness if a == i)


def build_class_graph(g: Digraph, classes: Sequence[frozenset[int]]) -> ClassGraph:
    class_of = [-1] * g.n
    for i, cls in enumerate(classes):
        for v in cls:
            if not 0 <= v < g.n:
                raise PreconditionError(f"class {i} contains non-vertex {v}")
            if class_of[v] >= 0:
                raise PreconditionError(f"vertex {v} lies in classes {class_of[v]} and {i}")
            class_of[v] = i
    if -1 in class_of:
        raise PreconditionError(f"vertex {class_of.index(-1)} is in no class")
    witness: dict[tuple[int, int], tuple[int, int]] = {}
    for u in range(g.n):
        cu = class_of[u]
        for v in g.out_adj[u]:
            cv = class_of[v]
            if cu != cv and (cu, cv) not in witness:
                witness[(cu, cv)] = (u, v)
    return ClassGraph(tuple(frozenset(c) for c in classes), tuple(class_of), witness)


def _find_cycle(cg: ClassGraph) -> list[int]:
    succ = [cg.successors(i) for i in range(cg.q)]
    on_stack = [False] * cg.q
    done = [False] * cg.q
    for start in range(cg.q):
        if done[start]:
            continue
        path = [start]
        pos = [0]
        on_stack[start] = True
        while path:
            v = path[-1]
            i = pos[-1]
            if i < len(succ[v]):
                pos[-1] = i + 1
                w = succ[v][i]
                if on_stack[w]:
                    return path[path.index(w) :]
                if not done[w]:
                    path.append(w)
                    pos.append(0)
                    on_stack[w] = True
            else:
                path.pop()
                pos.pop()
                on_stack[v] = False
                done[v] = True
    raise InternalError("class graph of a strongly connected graph has no cycle")


def _path_within(g: Digraph, members: frozenset[int], src: int, dst: int) -> list[int]:
    if src == dst:
        return [src]
    prev = {src: src}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.out_adj[v]:
                if w in members and w not in prev:
                    prev[w] = v
                    if w == dst:
                        path = [w]
                        while path[-1] != src:
                            path.append(prev[path[-1]])
                        path.reverse()
                        return path
                    nxt.append(w)
        frontier = nxt
    raise InternalError(f"no path from {src} to {dst} inside a strongly connected class")


def is_hamiltonian_cycle(g: Digraph, order: Sequence[int]) -> bool:
    if len(order) != g.n or g.n < 2 or set(order) != set(range(g.n)):
        return False
    return all(g.has_arc(order[i], order[(i + 1) % g.n]) for i in range(g.n))


def hamiltonian_cycle(g: Digraph) -> tuple[int, ...]:
    """A Hamiltonian cycle of a strongly connected MaxPSS-disjoint ``g``, starting at 0."""
    if g.n < 2:
        raise PreconditionError("a Hamiltonian cycle needs at least 2 vertices")
    if not is_strongly_connected(g):
        raise NotStronglyConnectedError("graph is not strongly connected")
    c, classes = maxpss_all(g, check=False)
    assert c is not None
    if not c.kind.maxpss_disjoint:
        raise PreconditionError("graph is not MaxPSS-disjoint")
    cg = build_class_graph(g, classes)
    ring = _find_cycle(cg)
    q = len(ring)
    order: list[int] = []
    for k in range(q):
        here, after, before = ring[k], ring[(k + 1) % q], ring[k - 1]
        entry = cg.witness[(before, here)][1]
        exit_ = cg.witness[(here, after)][0]
        order += _path_within(g, cg.classes[here], entry, exit_)
    if len(order) != g.n or len(set(order)) != g.n:
        raise InternalError(
            f"stitched cycle has {len(order)} vertices on a graph with {g.n}; "
            "all-class cycles are expected to be Hamiltonian"
        )
    start = order.index(0)
    cycle = tuple(order[start:] + order[:start])
    if not is_hamiltonian_cycle(g, cycle):
        raise InternalError("stitched sequence is not a cycle of the graph")
    return cycle


@dataclass(frozen=True)
class SpanningSearchResult:
    status: Literal["found", "exhausted", "unknown"]
    cycle: tuple[int, ...] | None
    arcs: tuple[tuple[int, int], ...] | None
    nodes: int


def hamiltonian_via_spanning_subgraph(g: Digraph, budget: int = 10**6) -> SpanningSearchResult:
    """Search arc subsets for a strongly connected MaxPSS-disjoint spanning subgraph.

    Subsets are explored depth-first from the full arc set downwards, removing
    arcs in index order; a branch is cut as soon as strong connectivity is
    lost.  ``budget`` caps the number of subsets examined.  ``exhausted``
    means no such subgraph exists; ``unknown`` means the budget ran out.
    """
    arcs = g.arcs()
    nodes = 0
    if g.n < 2 or not is_strongly_connected(g):
        return SpanningSearchResult("exhausted", None, None, 0)

    def examine(removed: tuple[int, ...]) -> tuple[bool, Digraph | None]:
        drop = set(removed)
        sub = Digraph.from_arcs(g.n, [a for i, a in enumerate(arcs) if i not in drop])
        if not is_strongly_connected(sub):
            return False, None
        if classify(sub, check=False).kind.maxpss_disjoint:
            return True, sub
        return True, None

    stack: list[tuple[tuple[int, ...], int]] = []
    nodes += 1
    alive, hit = examine(())
    if hit is not None:
        return SpanningSearchResult("found", hamiltonian_cycle(hit), tuple(hit.arcs()), nodes)
    stack.append(((), 0))
    while stack:
        removed, nxt = stack.pop()
        if nxt >= len(arcs):
            continue
        stack.append((removed, nxt + 1))
        child = removed + (nxt,)
        if nodes >= budget:
            return SpanningSearchResult("unknown", None, None, nodes)
        nodes += 1
        alive, hit = examine(child)
        if hit is not None:
            return SpanningSearchResult("found", hamiltonian_cycle(hit), tuple(hit.arcs()), nodes)
        if alive:
            stack.append((child, nxt + 1))
    return SpanningSearchResult("exhausted", None, None, nodes)


def minrs_disjoint_making_edge(g: Digraph) -> tuple[int, int]:
    """An absent arc whose addition makes a MaxPSS-disjoint ``g`` MinRS-disjoint.

    Along a Hamiltonian cycle ``v1 v2 ... vn`` the chord ``(v1, v3)`` is
    absent unless ``g`` is already MinRS-disjoint as well (kind ``Both``):
    such a chord would make ``V - {v2}`` strongly connected, and a
    MaxPSS-disjoint graph with that MaxPSS has exactly the two MinRSs
    ``{v2}`` and ``V - {v2}``.  In that case every absent arc keeps the
    graph MinRS-disjoint, so the first absent chord along the cycle (or
    failing that, the first absent arc) is returned.
    """
    if g.n < 3:
        raise PreconditionError("needs at least 3 vertices")
    cycle = hamiltonian_cycle(g)
    n = len(cycle)
    for i in range(n):
        arc = (cycle[i], cycle[(i + 2) % n])
        if not g.has_arc(*arc):
            if i > 0 and not classify(g, check=False).kind.minrs_disjoint:
                raise InternalError(f"chord {(cycle[0], cycle[2])} of the Hamiltonian cycle is already an arc")
            return arc
    for u in range(n):
        for v in range(n):
            if u != v and not g.has_arc(u, v):
                return (u, v)
    raise PreconditionError("graph is complete; no arc can be added")
