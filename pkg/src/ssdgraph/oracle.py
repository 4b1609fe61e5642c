"""Exponential brute-force ground truth.

Nothing here shares code with the fast algorithms beyond the ``Digraph``
container: strong connectivity, removable sets, dominators and Hamiltonian
cycles are all recomputed from their definitions over bitmasks.  Every
routine refuses inputs beyond its size guard instead of truncating.

Not imported by ``ssdgraph/__init__``; tests and ``ssdgraph selftest`` use it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import SizeGuardError
from .graph import Digraph

MAX_SOLUTION_UNIVERSE = 20
MAX_HAMILTONIAN_N = 12


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class SetSystem:
    """An explicit set system over elements ``0 .. size-1``."""

    size: int
    solutions: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.solutions)) != len(self.solutions):
            raise ValueError("duplicate solutions in set system")

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[Hashable]], universe: Sequence[Hashable] | None = None) -> SetSystem:
        """Build from arbitrary element labels; elements are indexed by sorted order."""
        sets = [frozenset(s) for s in sets]
        if universe is None:
            universe = sorted(set().union(*sets)) if sets else []
        index = {e: i for i, e in enumerate(universe)}
        masks = tuple(sorted({to_mask(index[e] for e in s) for s in sets}))
        return cls(len(universe), masks)

    @property
    def solution_set(self) -> frozenset[int]:
        return frozenset(self.solutions)

    def families(self) -> list[frozenset[int]]:
        return [from_mask(m) for m in self.solutions]


# ---------------------------------------------------------------- digraphs


def _adjacency_masks(g: Digraph) -> tuple[list[int], list[int]]:
    out = [to_mask(g.out_adj[v]) for v in range(g.n)]
    inn = [to_mask(g.in_adj[v]) for v in range(g.n)]
    return out, inn


def _closure(adj: list[int], start_bit: int, within: int) -> int:
    reach = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= within & ~reach
        reach |= nxt
        frontier = nxt
    return reach


def _strong_mask(out: list[int], inn: list[int], s: int) -> bool:
    if s == 0:
        return False
    low = s & -s
    return _closure(out, low, s) == s and _closure(inn, low, s) == s


def brute_is_strong(g: Digraph, vertices: Iterable[int] | None = None) -> bool:
    out, inn = _adjacency_masks(g)
    s = (1 << g.n) - 1 if vertices is None else to_mask(vertices)
    return _strong_mask(out, inn, s)


def brute_solutions(g: Digraph) -> SetSystem:
    """All nonempty vertex subsets inducing strongly connected subgraphs."""
    if g.n > MAX_SOLUTION_UNIVERSE:
        raise SizeGuardError(f"brute_solutions refuses n={g.n} > {MAX_SOLUTION_UNIVERSE}")
    out, inn = _adjacency_masks(g)
    sols = tuple(s for s in range(1, 1 << g.n) if _strong_mask(out, inn, s))
    return SetSystem(g.n, sols)


def _maxpss_masks(sols: frozenset[int], c: int) -> list[int]:
    """Maximal solutions strictly inside ``c``."""
    cands = []
    sub = (c - 1) & c
    while sub:
        if sub in sols:
            cands.append(sub)
        sub = (sub - 1) & c
    # descending popcount: a candidate is maximal iff no kept one contains it
    cands.sort(key=lambda m: -m.bit_count())
    kept: list[int] = []
    for x in cands:
        if not any(x & k == x for k in kept):
            kept.append(x)
    return sorted(kept)


def brute_maxpss_masks(system: SetSystem, c: int) -> list[int]:
    return _maxpss_masks(system.solution_set, c)


def brute_minrs_masks(system: SetSystem, c: int) -> list[int]:
    """Minimal nonempty ``Y`` with ``c - Y`` a solution, computed independently of MaxPSS."""
    sols = system.solution_set
    rs = []
    y = c
    while y:
        if y != c and (c ^ y) in sols:
            rs.append(y)
        y = (y - 1) & c
    rs.sort(key=lambda m: m.bit_count())
    kept: list[int] = []
    for y in rs:
        if not any(k & y == k for k in kept):
            kept.append(y)
    return sorted(kept)


def brute_maxpss(system: SetSystem, c: Iterable[int]) -> list[frozenset[int]]:
    cm = to_mask(c)
    return [from_mask(x) for x in brute_maxpss_masks(system, cm)]


def brute_minrs(system: SetSystem, c: Iterable[int]) -> list[frozenset[int]]:
    cm = to_mask(c)
    ys = brute_minrs_masks(system, cm)
    xs = brute_maxpss_masks(system, cm)
    if sorted(cm ^ x for x in xs) != ys:
        raise AssertionError("MaxPSS / MinRS complement duality failed")
    return [from_mask(y) for y in ys]


def pairwise_disjoint(masks: Sequence[int]) -> bool:
    seen = 0
    for m in masks:
        if seen & m:
            return False
        seen |= m
    return True


def is_partition(masks: Sequence[int], universe: int) -> bool:
    return pairwise_disjoint(masks) and _union(masks) == universe


def _union(masks: Iterable[int]) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


# ------------------------------------------------------ set-system checks


def _minrs_table(system: SetSystem) -> dict[int, list[int]]:
    sols = system.solution_set
    return {s: brute_minrs_masks(system, s) for s in system.solutions} if sols else {}


def _proper_sub_solutions(sols: frozenset[int], s: int) -> Iterable[int]:
    sub = (s - 1) & s
    while sub:
        if sub in sols:
            yield sub
        sub = (sub - 1) & s


def check_ssd(system: SetSystem) -> bool:
    """Every MinRS of ``S`` is a superset of, subset of, or disjoint from each solution ``S' < S``."""
    sols = system.solution_set
    table = _minrs_table(system)
    for s, ys in table.items():
        if not ys:
            continue
        for sp in _proper_sub_solutions(sols, s):
            for y in ys:
                inter = y & sp
                if inter and inter != sp and inter != y:
                    return False
    return True


def check_sd(system: SetSystem) -> bool:
    """Like :func:`check_ssd` without the superset case."""
    sols = system.solution_set
    table = _minrs_table(system)
    for s, ys in table.items():
        if not ys:
            continue
        for sp in _proper_sub_solutions(sols, s):
            for y in ys:
                inter = y & sp
                if inter and inter != y:
                    return False
    return True


def check_confluent(system: SetSystem) -> bool:
    """``S'' <= S & S'`` for solutions implies ``S | S'`` is a solution."""
    if system.size > MAX_SOLUTION_UNIVERSE:
        raise SizeGuardError(f"check_confluent refuses universe {system.size}")
    sols = system.solution_set
    full = 1 << system.size
    # contains_solution[m]: some solution is a subset of m
    contains = bytearray(full)
    for s in sols:
        contains[s] = 1
    for bit in range(system.size):
        b = 1 << bit
        for m in range(full):
            if m & b and not contains[m] and contains[m ^ b]:
                contains[m] = 1
    ordered = system.solutions
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if contains[a & b] and (a | b) not in sols:
                return False
    return True


def check_laminar(system: SetSystem) -> bool:
    for a, b in combinations(system.solutions, 2):
        if a & b and a & ~b and b & ~a:
            return False
    return True


# ------------------------------------------------- k-edge-connectivity


def _undirected_edges(g: Digraph, s: int) -> list[tuple[int, int]]:
    return [(u, v) for u in _bits(s) for v in g.out_adj[u] if u < v and s >> v & 1]


def brute_k_edge_connected(g: Digraph, vertices: Iterable[int], k: int, *, undirected: bool = False) -> bool:
    """Whether ``G[S]`` stays strongly connected (connected) after deleting any ``< k`` edges.

    For ``undirected=True`` the digraph must be symmetric and each edge is
    removed in both directions at once.
    """
    s = to_mask(vertices)
    if s == 0:
        raise ValueError("empty vertex set")
    if s & (s - 1) == 0 or k <= 0:
        return True
    if undirected:
        edges = _undirected_edges(g, s)
    else:
        edges = [(u, v) for u in _bits(s) for v in g.out_adj[u] if s >> v & 1]
    if len(edges) > 40:
        raise SizeGuardError(f"brute_k_edge_connected refuses {len(edges)} edges")
    base_out = [0] * g.n
    base_in = [0] * g.n
    for u, v in edges:
        base_out[u] |= 1 << v
        base_in[v] |= 1 << u
        if undirected:
            base_out[v] |= 1 << u
            base_in[u] |= 1 << v
    for r in range(k):
        for removed in combinations(edges, r):
            out = list(base_out)
            inn = list(base_in)
            for u, v in removed:
                out[u] &= ~(1 << v)
                inn[v] &= ~(1 << u)
                if undirected:
                    out[v] &= ~(1 << u)
                    inn[u] &= ~(1 << v)
            if not _strong_mask(out, inn, s):
                return False
    return True


def brute_k_edge_system(g: Digraph, k: int, *, undirected: bool = False) -> SetSystem:
    if g.n > 12:
        raise SizeGuardError(f"brute_k_edge_system refuses n={g.n}")
    sols = tuple(
        s for s in range(1, 1 << g.n) if brute_k_edge_connected(g, _bits(s), k, undirected=undirected)
    )
    return SetSystem(g.n, sols)


# ----------------------------------------------------- other graph facts


def brute_hamiltonian(g: Digraph) -> tuple[int, ...] | None:
    """Backtracking search for a Hamiltonian cycle starting at vertex 0."""
    n = g.n
    if n > MAX_HAMILTONIAN_N:
        raise SizeGuardError(f"brute_hamiltonian refuses n={n} > {MAX_HAMILTONIAN_N}")
    if n < 2:
        return None
    out, _ = _adjacency_masks(g)
    full = (1 << n) - 1
    path = [0]
    stack = [_bits(out[0] & ~1)]
    used = 1
    while stack:
        options = stack[-1]
        if not options:
            stack.pop()
            used &= ~(1 << path.pop())
            continue
        w = options.pop()
        path.append(w)
        used |= 1 << w
        if used == full:
            if out[w] & 1:
                return tuple(path)
            used &= ~(1 << path.pop())
            continue
        stack.append(_bits(out[w] & ~used))
    return None


def brute_strong_articulation_points(g: Digraph) -> frozenset[int]:
    full = (1 << g.n) - 1
    base = _scc_count(g, full)
    return frozenset(v for v in range(g.n) if _scc_count(g, full & ~(1 << v)) > base)


def _scc_count(g: Digraph, s: int) -> int:
    out, inn = _adjacency_masks(g)
    count = 0
    rest = s
    while rest:
        low = rest & -rest
        comp = _closure(out, low, rest) & _closure(inn, low, rest)
        rest &= ~comp
        count += 1
    return count


def brute_dominates(g: Digraph, root: int, u: int, v: int) -> bool:
    """Every root-to-``v`` path visits ``u``."""
    if u in (root, v):
        return True
    out, _ = _adjacency_masks(g)
    within = ((1 << g.n) - 1) & ~(1 << u)
    return not (_closure(out, 1 << root, within) >> v & 1)


def brute_minrs_of_graph(g: Digraph) -> list[frozenset[int]]:
    system = brute_solutions(g)
    return brute_minrs(system, range(g.n))


def brute_maxpss_of_graph(g: Digraph) -> list[frozenset[int]]:
    system = brute_solutions(g)
    return brute_maxpss(system, range(g.n))


def brute_classify(system: SetSystem, c: int) -> tuple[bool, bool]:
    """``(MaxPSS-disjoint, MinRS-disjoint)`` of ``c`` by definition."""
    return (
        pairwise_disjoint(brute_maxpss_masks(system, c)),
        pairwise_disjoint(brute_minrs_masks(system, c)),
    )
