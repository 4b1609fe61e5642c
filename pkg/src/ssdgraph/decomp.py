"""Minimal removable sets and maximal proper strongly-connected subsets.

For a strongly connected digraph ``G = (V, E)``:

* a *MaxPSS* is an inclusion-maximal proper subset ``X`` of ``V`` with
  ``G[X]`` strongly connected;
* a *MinRS* is an inclusion-minimal nonempty ``Y`` such that ``G - Y`` is
  strongly connected.  ``X -> V - X`` is a bijection between the two.

Every MinRS avoiding a root ``s`` is a vertical path in the dominator tree
of ``G`` from ``s`` ending at a leaf, and the same path reversed in the
dominator tree of the transpose.  :func:`scan_minrs` walks up from every
leaf to recover all of them in linear time; everything else here is built
on top of that scan.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dominators import DominatorTreePair, build_pair
from .errors import InternalError, NotStronglyConnectedError, PreconditionError
from .graph import (
    Digraph,
    induced_subgraph,
    is_strongly_connected,
    strongly_connected_components,
)
from .work import charge


@dataclass(frozen=True)
class MinRsPath:
    """A MinRS together with the order of its Hamiltonian path in ``G[Y]``.

    ``vertices[0]`` is the only vertex entered from outside ``Y`` and
    ``vertices[-1]`` the only one with arcs leaving ``Y``.
    """

    vertices: tuple[int, ...]

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def head(self) -> int:
        return self.vertices[0]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices


class Kind(str, enum.Enum):
    MAXPSS_DISJOINT = "MaxPssDisjoint"
    MINRS_DISJOINT = "MinRsDisjoint"
    BOTH = "Both"

    @property
    def maxpss_disjoint(self) -> bool:
        return self is not Kind.MINRS_DISJOINT

    @property
    def minrs_disjoint(self) -> bool:
        return self is not Kind.MAXPSS_DISJOINT


@dataclass(frozen=True)
class Classification:
    kind: Kind
    witnesses: tuple[MinRsPath, ...]


class MinRsScan:
    """Result of one leaf-walk from root ``s``.

    Keeps the dominator trees and a per-run mark array so the complement of
    each found MinRS can be listed in time proportional to its size.
    """

    def __init__(self, g: Digraph, root: int, trees: DominatorTreePair) -> None:
        self.graph = g
        self.root = root
        self.trees = trees
        self.paths: list[MinRsPath] = []
        self._mark = [-1] * g.n
        self._walk()

    def _walk(self) -> None:
        fwd = self.trees.forward
        bwd = self.trees.backward
        f_parent, f_children = fwd.parent, fwd.children
        b_parent, b_children = bwd.parent, bwd.children
        root = self.root
        steps = 0
        for v in range(self.graph.n):
            if f_children[v] or v == root or len(b_children[v]) > 1:
                continue
            u = v
            collected = [u]
            while b_children[u]:
                p = f_parent[u]
                if p == root:
                    # the transpose parent of the root is undefined
                    break
                if len(f_children[p]) != 1 or len(b_children[p]) > 1 or b_parent[p] != u:
                    break
                u = p
                collected.append(u)
            steps += len(collected)
            if not b_children[u]:
                index = len(self.paths)
                for w in collected:
                    self._mark[w] = index
                collected.reverse()
                self.paths.append(MinRsPath(tuple(collected)))
        charge(self.graph.n + steps)

    def complement(self, index: int) -> frozenset[int]:
        """``V - Y`` for ``Y = self.paths[index]`` via a dominator-tree walk.

        ``Y`` is a whole subtree of the forward tree, so skipping its top
        vertex skips all of it.
        """
        if not 0 <= index < len(self.paths):
            raise PreconditionError(f"no MinRS with index {index} in this scan")
        mark = self._mark
        children = self.trees.forward.children
        out = [self.root]
        todo = [self.root]
        while todo:
            v = todo.pop()
            for c in children[v]:
                if mark[c] != index:
                    out.append(c)
                    todo.append(c)
        charge(len(out))
        return frozenset(out)


def _require(g: Digraph) -> None:
    if g.n < 2:
        raise PreconditionError("operation requires at least 2 vertices")
    if not is_strongly_connected(g):
        raise NotStronglyConnectedError("graph is not strongly connected")


def scan_minrs(g: Digraph, s: int, *, check: bool = True) -> MinRsScan:
    if check:
        _require(g)
    if not 0 <= s < g.n:
        raise PreconditionError(f"root {s} is not a vertex")
    return MinRsScan(g, s, build_pair(g, s, check=False))


def gen_minrs_without_root(g: Digraph, s: int) -> list[MinRsPath]:
    """All MinRSs of ``g`` not containing ``s``, ordered by their leaf id."""
    return scan_minrs(g, s).paths


def complement_of(scan: MinRsScan, y: MinRsPath | int) -> frozenset[int]:
    if isinstance(y, MinRsPath):
        try:
            index = scan.paths.index(y)
        except ValueError:
            raise PreconditionError("MinRS does not belong to this scan") from None
    else:
        index = y
    return scan.complement(index)


def _second_root(first: MinRsScan) -> int:
    # any vertex of the unique MinRS works; take its path head
    return first.paths[0].head


def _two_scans(g: Digraph, check: bool) -> tuple[MinRsScan, MinRsScan | None]:
    scan_s = scan_minrs(g, 0, check=check)
    if not scan_s.paths:
        raise InternalError("no MinRS avoids the root; the graph cannot be strongly connected")
    if len(scan_s.paths) > 1:
        return scan_s, None
    return scan_s, scan_minrs(g, _second_root(scan_s), check=False)


def _witnesses(scan_s: MinRsScan, scan_t: MinRsScan | None) -> tuple[MinRsPath, ...]:
    found = list(scan_s.paths)
    if scan_t is not None:
        found += [p for p in scan_t.paths if p not in found]
    return tuple(found)


def is_minrs_disjoint(g: Digraph, *, check: bool = True) -> tuple[bool, tuple[MinRsPath, ...]]:
    scan_s, scan_t = _two_scans(g, check)
    if scan_t is None or len(scan_t.paths) > 1:
        return True, _witnesses(scan_s, scan_t)
    disjoint = scan_s.paths[0].members.isdisjoint(scan_t.paths[0].members)
    return disjoint, _witnesses(scan_s, scan_t)


def classify(g: Digraph, *, check: bool = True) -> Classification:
    """Decide which of the two disjointness properties ``g`` has.

    At least one always holds; both hold exactly when the MinRS family is
    two sets partitioning ``V``.
    """
    scan_s, scan_t = _two_scans(g, check)
    witnesses = _witnesses(scan_s, scan_t)
    if scan_t is None or len(scan_t.paths) > 1:
        return Classification(Kind.MINRS_DISJOINT, witnesses)
    ys, yt = scan_s.paths[0], scan_t.paths[0]
    if not ys.members.isdisjoint(yt.members):
        return Classification(Kind.MAXPSS_DISJOINT, witnesses)
    charge(g.n)
    if len(ys) + len(yt) == g.n:
        return Classification(Kind.BOTH, witnesses)
    return Classification(Kind.MINRS_DISJOINT, witnesses)


def minrs_family_minrs_disjoint(g: Digraph, *, check: bool = True) -> list[MinRsPath]:
    """Every MinRS of a MinRS-disjoint ``g``: those avoiding ``s`` and the one holding ``s``."""
    scan_s, scan_t = _root_and_head_scans(g, check)
    return list(scan_s.paths) + [p for p in scan_t.paths if scan_s.root in p]


def _root_and_head_scans(g: Digraph, check: bool) -> tuple[MinRsScan, MinRsScan]:
    scan_s = scan_minrs(g, 0, check=check)
    if not scan_s.paths:
        raise InternalError("no MinRS avoids the root; the graph cannot be strongly connected")
    return scan_s, scan_minrs(g, _second_root(scan_s), check=False)


def maxpss_all_minrs_disjoint(g: Digraph, *, check: bool = True) -> list[frozenset[int]]:
    scan_s, scan_t = _root_and_head_scans(g, check)
    out = [scan_s.complement(i) for i in range(len(scan_s.paths))]
    s = scan_s.root
    out += [scan_t.complement(i) for i, p in enumerate(scan_t.paths) if s in p]
    return out


def maxpss_all_maxpss_disjoint(g: Digraph, *, check: bool = True) -> list[frozenset[int]]:
    scan = scan_minrs(g, 0, check=check)
    if len(scan.paths) != 1:
        raise PreconditionError(
            f"expected a unique MinRS avoiding the root of a MaxPSS-disjoint graph, found {len(scan.paths)}"
        )
    y = scan.paths[0]
    out = [scan.complement(0)]
    sub, ids = induced_subgraph(g, y.vertices)
    for comp in strongly_connected_components(sub):
        out.append(frozenset(ids[i] for i in comp))
    return out


def maxpss_all(g: Digraph, *, check: bool = True) -> tuple[Classification | None, list[frozenset[int]]]:
    """Classify ``g`` and list all of its MaxPSSs.

    A single vertex has no proper nonempty subset, so it yields
    ``(None, [])``.
    """
    if g.n == 1:
        return None, []
    c = classify(g, check=check)
    if c.kind is Kind.MINRS_DISJOINT:
        return c, maxpss_all_minrs_disjoint(g, check=False)
    return c, maxpss_all_maxpss_disjoint(g, check=False)


def maxpss_of_any_digraph(g: Digraph) -> list[frozenset[int]]:
    """MaxPSSs of ``V`` for any digraph: the SCCs unless ``g`` is strongly connected."""
    if g.n < 2:
        raise PreconditionError("operation requires at least 2 vertices")
    if not is_strongly_connected(g):
        return strongly_connected_components(g)
    return maxpss_all(g, check=False)[1]
