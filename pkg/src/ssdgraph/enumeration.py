"""Linear-delay enumeration of solutions of SSD set systems.

The engine only talks to a system through three oracles (:class:`SsdOracles`).
:func:`strong_oracles` instantiates them for the strongly-connected system
of a digraph, and :func:`iter_strong_subgraphs` drives the engine over the
whole vertex set by binary partition on vertex ids.

Output timing alternates with recursion depth (emit before the children at
even depth, after them at odd depth); this is what bounds the work between
two consecutive outputs by the cost of a constant number of frames.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .decomp import classify, maxpss_all_maxpss_disjoint, minrs_family_minrs_disjoint
from .errors import InternalError, PreconditionError
from .graph import Digraph, component_of, induced_subgraph
from .work import charge

Solution = frozenset
Sink = Callable[[frozenset], None]


@dataclass(frozen=True)
class SsdOracles:
    """The three oracles an SSD system is accessed through.

    ``is_maxpss_disjoint(S)``
        whether the solution ``S`` is MaxPSS-disjoint.
    ``maxpss(S, I)``
        the MaxPSSs ``X`` of ``S`` with ``I <= X`` (MaxPSS-disjoint ``S`` only).
    ``minrs(S, I)``
        the MinRSs ``Y`` of ``S`` with ``Y & I`` empty (MinRS-disjoint ``S`` only).
    """

    is_maxpss_disjoint: Callable[[frozenset], bool]
    maxpss: Callable[[frozenset, frozenset], list[frozenset]]
    minrs: Callable[[frozenset, frozenset], list[frozenset]]


@dataclass
class EnumStats:
    frames: int = 0
    oracle_calls: int = 0
    max_oracle_calls_per_frame: int = 0
    peak_depth: int = 0
    outputs: int = 0


@dataclass
class _Frame:
    solution: frozenset
    seed: frozenset
    depth: int
    children: Iterator[tuple[frozenset, frozenset]] | None = field(default=None)


def _check_disjoint(sets: list[frozenset], what: str) -> None:
    seen: set = set()
    for s in sets:
        if not seen.isdisjoint(s):
            raise InternalError(f"{what} oracle returned overlapping sets")
        seen |= s


def _minrs_children(
    solution: frozenset, seed: frozenset, ys: list[frozenset]
) -> Iterator[tuple[frozenset, frozenset]]:
    acc = seed
    for y in ys:
        yield solution - y, acc
        acc = acc | y
        charge(len(y))


def iter_ssd(
    oracles: SsdOracles,
    solution: Iterable,
    seed: Iterable,
    stats: EnumStats | None = None,
    *,
    check: bool = True,
) -> Iterator[frozenset]:
    """Yield every solution ``S'`` with ``seed <= S' <= solution`` exactly once."""
    root_solution = frozenset(solution)
    root_seed = frozenset(seed)
    if not root_seed:
        raise PreconditionError("seed set must be nonempty")
    if not root_seed <= root_solution:
        raise PreconditionError("seed set must be a subset of the solution")
    stack = [_Frame(root_solution, root_seed, 0)]
    while stack:
        frame = stack[-1]
        if frame.children is None:
            if stats is not None:
                stats.frames += 1
                stats.peak_depth = max(stats.peak_depth, frame.depth)
            charge(len(frame.solution))
            if frame.depth % 2 == 0:
                if stats is not None:
                    stats.outputs += 1
                yield frame.solution
            calls = 2
            if oracles.is_maxpss_disjoint(frame.solution):
                xs = oracles.maxpss(frame.solution, frame.seed)
                if check:
                    _check_disjoint(xs, "MaxPSS")
                frame.children = iter([(x, frame.seed) for x in xs])
            else:
                ys = oracles.minrs(frame.solution, frame.seed)
                if check:
                    _check_disjoint(ys, "MinRS")
                frame.children = _minrs_children(frame.solution, frame.seed, ys)
            if stats is not None:
                stats.oracle_calls += calls
                stats.max_oracle_calls_per_frame = max(stats.max_oracle_calls_per_frame, calls)
            continue
        nxt = next(frame.children, None)
        if nxt is None:
            stack.pop()
            if frame.depth % 2 == 1:
                if stats is not None:
                    stats.outputs += 1
                yield frame.solution
            continue
        stack.append(_Frame(nxt[0], nxt[1], frame.depth + 1))


def enum_ssd(oracles: SsdOracles, solution: Iterable, seed: Iterable, sink: Sink) -> None:
    for s in iter_ssd(oracles, solution, seed):
        sink(s)


def strong_oracles(g: Digraph) -> SsdOracles:
    """Oracles for the system of vertex sets inducing strongly connected subgraphs.

    Each call recomputes on ``G[S]``; nothing is cached between calls.
    """

    def is_maxpss_disjoint(s: frozenset) -> bool:
        if len(s) == 1:
            return True
        sub, _ = induced_subgraph(g, s)
        return classify(sub, check=False).kind.maxpss_disjoint

    def maxpss(s: frozenset, seed: frozenset) -> list[frozenset]:
        if len(s) == 1:
            return []
        sub, ids = induced_subgraph(g, s)
        out = []
        for x in maxpss_all_maxpss_disjoint(sub, check=False):
            mapped = frozenset(ids[i] for i in x)
            if seed <= mapped:
                out.append(mapped)
        return out

    def minrs(s: frozenset, seed: frozenset) -> list[frozenset]:
        if len(s) == 1:
            return []
        sub, ids = induced_subgraph(g, s)
        out = []
        for y in minrs_family_minrs_disjoint(sub, check=False):
            mapped = frozenset(ids[i] for i in y.vertices)
            if mapped.isdisjoint(seed):
                out.append(mapped)
        return out

    return SsdOracles(is_maxpss_disjoint, maxpss, minrs)


def iter_strong_subgraphs(g: Digraph, stats: EnumStats | None = None) -> Iterator[frozenset[int]]:
    """Every nonempty vertex set inducing a strongly connected subgraph, once each.

    Branch ``i`` covers the sets whose smallest vertex is ``i``; its largest
    member is the SCC of ``i`` among vertices ``>= i``.
    """
    oracles = strong_oracles(g)
    for v in range(g.n):
        top = component_of(g, v, allowed_from=v)
        yield from iter_ssd(oracles, top, (v,), stats, check=False)


def enumerate_strong_subgraphs(g: Digraph, sink: Sink) -> None:
    for s in iter_strong_subgraphs(g):
        sink(s)


def count_strong_subgraphs(g: Digraph, limit: int | None = None) -> int:
    count = 0
    for _ in iter_strong_subgraphs(g):
        count += 1
        if limit is not None and count >= limit:
            break
    return count
