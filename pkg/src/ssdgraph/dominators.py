"""Dominator trees of flow graphs.

Construction is the simple Lengauer-Tarjan variant (path compression
without balanced linking), O(m log n).  Everything is iterative so deep
trees (long cycles) do not hit the interpreter recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import NotStronglyConnectedError, PreconditionError
from .graph import Digraph, is_strongly_connected, transpose
from .work import charge


@dataclass(frozen=True)
class DominatorTree:
    """Immediate-dominator tree rooted at ``root``.

    ``parent[root] == root``; use :meth:`is_root` instead of comparing
    against a sentinel.  ``children`` lists are sorted by vertex id.
    """

    root: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]

    def is_root(self, v: int) -> bool:
        return v == self.root

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def dominates(self, u: int, v: int) -> bool:
        """True iff ``u`` is an ancestor-or-self of ``v``."""
        pre, post = self._intervals
        return pre[u] <= pre[v] and post[v] <= post[u]

    @cached_property
    def _intervals(self) -> tuple[list[int], list[int]]:
        n = len(self.parent)
        children = self.children
        pre = [0] * n
        post = [0] * n
        clock = 1
        stack = [(self.root, 0)]
        while stack:
            v, i = stack[-1]
            if i < len(children[v]):
                stack[-1] = (v, i + 1)
                c = children[v][i]
                pre[c] = clock
                clock += 1
                stack.append((c, 0))
            else:
                stack.pop()
                post[v] = clock
                clock += 1
        return pre, post

    def leaves(self) -> list[int]:
        return [v for v, ch in enumerate(self.children) if not ch]

    def ancestors(self, v: int) -> list[int]:
        """``v`` and its ancestors up to the root, bottom-up."""
        out = [v]
        while v != self.root:
            v = self.parent[v]
            out.append(v)
        return out


@dataclass(frozen=True)
class DominatorTreePair:
    root: int
    forward: DominatorTree
    backward: DominatorTree


def immediate_dominators(
    succ: Sequence[Sequence[int]], pred: Sequence[Sequence[int]], root: int
) -> list[int]:
    """Return ``idom`` with ``idom[root] == root``.

    Raises :class:`PreconditionError` naming the first vertex not reachable
    from ``root``.
    """
    n = len(succ)
    dfn = [-1] * n
    order: list[int] = []
    dfs_parent = [-1] * n
    dfn[root] = 0
    order.append(root)
    stack = [root]
    pos = [0] * n
    while stack:
        v = stack[-1]
        adj = succ[v]
        i = pos[v]
        if i < len(adj):
            pos[v] = i + 1
            w = adj[i]
            if dfn[w] < 0:
                dfn[w] = len(order)
                order.append(w)
                dfs_parent[w] = v
                stack.append(w)
        else:
            stack.pop()
    if len(order) < n:
        missing = next(v for v in range(n) if dfn[v] < 0)
        raise PreconditionError(f"vertex {missing} is not reachable from root {root}")

    # All arrays below are indexed by DFS number.
    semi = list(range(n))
    idom = [0] * n
    ancestor = [-1] * n
    label = list(range(n))
    bucket: list[list[int]] = [[] for _ in range(n)]
    parent_num = [0] * n
    for w in range(1, n):
        parent_num[w] = dfn[dfs_parent[order[w]]]

    def evaluate(v: int) -> int:
        path = []
        x = v
        while ancestor[ancestor[x]] >= 0:
            path.append(x)
            x = ancestor[x]
        for x in reversed(path):
            a = ancestor[x]
            if semi[label[a]] < semi[label[x]]:
                label[x] = label[a]
            ancestor[x] = ancestor[a]
        return label[v]

    touched = n
    for w in range(n - 1, 0, -1):
        preds = pred[order[w]]
        touched += len(preds)
        sw = semi[w]
        for p in preds:
            u = dfn[p]
            a = ancestor[u]
            if a >= 0:
                u = label[u] if ancestor[a] < 0 else evaluate(u)
            if semi[u] < sw:
                sw = semi[u]
        semi[w] = sw
        bucket[sw].append(w)
        p = parent_num[w]
        ancestor[w] = p
        for v in bucket[p]:
            a = ancestor[v]
            u = label[v] if ancestor[a] < 0 else evaluate(v)
            idom[v] = u if semi[u] < semi[v] else p
        bucket[p] = []
    for w in range(1, n):
        if idom[w] != semi[w]:
            idom[w] = idom[idom[w]]
    charge(touched + n)

    result = [0] * n
    result[root] = root
    for w in range(1, n):
        result[order[w]] = order[idom[w]]
    return result


def _tree_from_parent(root: int, parent: list[int]) -> DominatorTree:
    children: list[list[int]] = [[] for _ in parent]
    for v, p in enumerate(parent):
        if v != root:
            children[p].append(v)
    # appended in increasing v, so already sorted
    charge(len(parent))
    return DominatorTree(root, tuple(parent), tuple(map(tuple, children)))


def build_dominator_tree(g: Digraph, s: int) -> DominatorTree:
    if not 0 <= s < g.n:
        raise PreconditionError(f"root {s} is not a vertex of a graph with {g.n} vertices")
    return _tree_from_parent(s, immediate_dominators(g.out_adj, g.in_adj, s))


def build_pair(g: Digraph, s: int, *, check: bool = True) -> DominatorTreePair:
    """Dominator trees of ``G_s`` and of its transpose, both rooted at ``s``."""
    if check and not is_strongly_connected(g):
        raise NotStronglyConnectedError("dominator tree pair requires a strongly connected graph")
    return DominatorTreePair(s, build_dominator_tree(g, s), build_dominator_tree(transpose(g), s))


def dominates(t: DominatorTree, u: int, v: int) -> bool:
    return t.dominates(u, v)
